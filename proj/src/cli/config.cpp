#include "qhyper/cli/config.hpp"

#include <charconv>
#include <fstream>
#include "json.hpp"

#include "qhyper/error.hpp"

namespace qhyper::cli {

namespace {

using nlohmann::json;

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ArgumentError(std::string(origin) + ": seed must be an unsigned 64-bit integer, got '" + text + "'");
  }
  return v;
}

int json_int(const json& v, const char* key) {
  if (!v.is_number_integer()) throw ArgumentError(std::string("config: '") + key + "' must be an integer");
  return v.get<int>();
}

std::string json_string(const json& v, const char* key) {
  if (!v.is_string()) throw ArgumentError(std::string("config: '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "tsv") return Format::Tsv;
  if (name == "human") return Format::Human;
  throw ArgumentError("unknown format '" + name + "' (expected json, tsv or human)");
}

const char* to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Tsv: return "tsv";
    case Format::Human: return "human";
  }
  return "json";
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ArgumentError("config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw ArgumentError("config file '" + path + "' must hold a JSON object");
  for (const auto& [key, v] : doc.items()) {
    if (key == "suite") {
      cfg.suite = json_string(v, "suite");
    } else if (key == "trials") {
      cfg.trials = json_int(v, "trials");
    } else if (key == "order") {
      cfg.order = json_int(v, "order");
    } else if (key == "epsilon_bits") {
      cfg.epsilon_bits = json_int(v, "epsilon_bits");
    } else if (key == "seed") {
      if (v.is_number_unsigned()) {
        cfg.seed = v.get<std::uint64_t>();
      } else if (v.is_string()) {
        cfg.seed = parse_seed(v.get<std::string>(), "config");
      } else {
        throw ArgumentError("config: 'seed' must be a non-negative integer or a decimal string");
      }
    } else if (key == "report_path") {
      cfg.report_path = json_string(v, "report_path");
    } else if (key == "format") {
      cfg.format = parse_format(json_string(v, "format"));
    } else {
      throw ArgumentError("config: unknown key '" + key + "'");
    }
  }
}

RunConfig resolve_config(const RunOverrides& flags, const char* env_seed) {
  RunConfig cfg;
  if (env_seed != nullptr && *env_seed != '\0') cfg.seed = parse_seed(env_seed, "QHYPER_SEED");
  if (flags.config_path) apply_config_file(*flags.config_path, cfg);
  if (flags.suite) cfg.suite = *flags.suite;
  if (flags.trials) cfg.trials = *flags.trials;
  if (flags.order) cfg.order = *flags.order;
  if (flags.epsilon_bits) cfg.epsilon_bits = *flags.epsilon_bits;
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.report_path) cfg.report_path = *flags.report_path;
  if (flags.format) cfg.format = parse_format(*flags.format);
  return cfg;
}

void validate(const RunConfig& cfg) {
  if (cfg.trials < 1 || cfg.trials > 10000) throw ArgumentError("trials must be in 1..10000");
  if (cfg.order < 1 || cfg.order > 64) throw ArgumentError("order must be in 1..64");
  if (cfg.epsilon_bits < 1 || cfg.epsilon_bits > 960) throw ArgumentError("epsilon-bits must be in 1..960");
}

verify::VerifyConfig to_verify_config(const RunConfig& cfg) {
  verify::VerifyConfig v;
  v.trials = cfg.trials;
  v.order = cfg.order;
  v.epsilon_bits = cfg.epsilon_bits;
  v.seed = cfg.seed;
  return v;
}

}  // namespace qhyper::cli
