#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qhyper/verify/engine.hpp"

namespace qhyper::cli {

enum class Format { Json, Tsv, Human };

struct RunConfig {
  std::string suite = "all";
  int trials = 10;
  int order = 12;
  int epsilon_bits = 80;
  std::uint64_t seed = 42;
  std::string report_path;  // empty: standard output
  Format format = Format::Json;
};

/// Values given explicitly on the command line.
struct RunOverrides {
  std::optional<std::string> suite;
  std::optional<int> trials;
  std::optional<int> order;
  std::optional<int> epsilon_bits;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> report_path;
  std::optional<std::string> format;
  std::optional<std::string> config_path;
};

Format parse_format(const std::string& name);
const char* to_string(Format f);

/// Reads a JSON object with any of the RunConfig fields into `cfg`.
/// Unknown keys and ill-typed values throw ArgumentError.
void apply_config_file(const std::string& path, RunConfig& cfg);

/// Default, then QHYPER_SEED, then the config file, then flags.
/// `env_seed` is the raw QHYPER_SEED value, if set.
RunConfig resolve_config(const RunOverrides& flags, const char* env_seed);

/// Throws ArgumentError unless 1 <= trials <= 10^4, 1 <= order <= 64 and
/// 1 <= epsilon_bits <= 960 (numeric sums round terms to a 2^-1024 grid).
void validate(const RunConfig& cfg);

verify::VerifyConfig to_verify_config(const RunConfig& cfg);

}  // namespace qhyper::cli
