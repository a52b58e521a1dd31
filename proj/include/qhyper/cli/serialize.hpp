#pragma once

#include <string>
#include <vector>

#include "qhyper/cli/config.hpp"
#include "qhyper/verify/report.hpp"

namespace qhyper::cli {

/// {suite, config, reports:[{id, mode, seed, trial, pass, deviation_num,
/// deviation_den, notes}]}. Seeds and rationals are decimal strings.
std::string to_json(const RunConfig& cfg, const std::vector<verify::IdentityReport>& reports);

/// Header line plus one tab-separated row per report, same fields as JSON.
std::string to_tsv(const std::vector<verify::IdentityReport>& reports);

/// Aligned table with one row per report and a summary line.
std::string to_human(const RunConfig& cfg, const std::vector<verify::IdentityReport>& reports);

std::string render(const RunConfig& cfg, const std::vector<verify::IdentityReport>& reports);

}  // namespace qhyper::cli
