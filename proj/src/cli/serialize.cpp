#include "qhyper/cli/serialize.hpp"

#include <algorithm>
#include "json.hpp"
#include <sstream>

namespace qhyper::cli {

using verify::IdentityReport;

namespace {

std::string tsv_field(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::string to_json(const RunConfig& cfg, const std::vector<IdentityReport>& reports) {
  nlohmann::ordered_json doc;
  doc["suite"] = cfg.suite;
  doc["config"] = {{"trials", cfg.trials},
                   {"order", cfg.order},
                   {"epsilon_bits", cfg.epsilon_bits},
                   {"seed", std::to_string(cfg.seed)}};
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    arr.push_back({{"id", r.id},
                   {"mode", to_string(r.mode)},
                   {"seed", std::to_string(r.seed)},
                   {"trial", r.trial},
                   {"pass", r.pass},
                   {"deviation_num", r.deviation.numerator_string()},
                   {"deviation_den", r.deviation.denominator_string()},
                   {"notes", r.notes}});
  }
  doc["reports"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::string to_tsv(const std::vector<IdentityReport>& reports) {
  std::ostringstream os;
  os << "id\tmode\tseed\ttrial\tpass\tdeviation_num\tdeviation_den\tnotes\n";
  for (const auto& r : reports) {
    os << r.id << '\t' << to_string(r.mode) << '\t' << r.seed << '\t' << r.trial << '\t'
       << (r.pass ? "true" : "false") << '\t' << r.deviation.numerator_string() << '\t'
       << r.deviation.denominator_string() << '\t' << tsv_field(r.notes) << '\n';
  }
  return os.str();
}

std::string to_human(const RunConfig& cfg, const std::vector<IdentityReport>& reports) {
  std::size_t id_width = 2;
  for (const auto& r : reports) id_width = std::max(id_width, r.id.size());
  std::ostringstream os;
  os << "suite " << cfg.suite << "  trials " << cfg.trials << "  order " << cfg.order << "  epsilon 2^-"
     << cfg.epsilon_bits << "  seed " << cfg.seed << "\n\n";
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.pass) ++passed;
    std::string id = r.id;
    id.resize(id_width, ' ');
    std::string mode = to_string(r.mode);
    mode.resize(8, ' ');
    std::string trial = std::to_string(r.trial);
    trial.insert(0, trial.size() < 4 ? 4 - trial.size() : 0, ' ');
    os << (r.pass ? "✓ " : "✗ ") << id << "  " << mode << trial << "  "
       << (r.errored ? "error" : (r.pass ? "pass " : "FAIL ")) << "  dev "
       << (r.deviation.is_zero() ? std::string("0") : r.deviation.dyadic_upper_bound(24).to_decimal(6).insert(0, "<="))
       << '\n';
    if (!r.pass && !r.notes.empty()) os << "    " << r.notes << '\n';
  }
  os << '\n' << passed << '/' << reports.size() << " passed\n";
  return os.str();
}

std::string render(const RunConfig& cfg, const std::vector<IdentityReport>& reports) {
  switch (cfg.format) {
    case Format::Tsv: return to_tsv(reports);
    case Format::Human: return to_human(cfg, reports);
    case Format::Json: break;
  }
  return to_json(cfg, reports);
}

}  // namespace qhyper::cli
