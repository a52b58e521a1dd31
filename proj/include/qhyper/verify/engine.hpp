#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qhyper/summation.hpp"
#include "qhyper/verify/report.hpp"
#include "qhyper/verify/sampler.hpp"

namespace qhyper::verify {

/// Strict modulus constraint |magnitude(sample)| < bound, enforced with the
/// margin |magnitude| <= 15/16 bound.
struct Constraint {
  std::string label;
  std::function<Rational(const ParamSample&)> magnitude;
  Rational bound = 1;
};

/// Truncation settings handed to the builders.
struct BuildSettings {
  int order = 12;
  SumControl sum;
};

/// The two sides of an identity flattened into comparable vectors.
struct Comparison {
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  std::string notes;

  void append(const std::vector<Rational>& l, const std::vector<Rational>& r);
  void append(const Rational& l, const Rational& r);
};

struct IdentitySpec {
  std::string id;
  Mode mode = Mode::Formal;
  std::vector<std::string> groups;
  std::vector<Constraint> constraints;
  std::function<void(Sampler&, ParamSample&)> sample;
  std::function<Comparison(const ParamSample&, const BuildSettings&)> build;
};

struct VerifyConfig {
  int trials = 10;
  int order = 12;
  int epsilon_bits = 80;
  std::uint64_t seed = 42;
};

/// Draws a sample satisfying every constraint; a draw is rejected when a
/// constraint fails or `probe` throws DomainError. Throws Error after 100
/// consecutive rejections.
ParamSample sample_params(const IdentitySpec& spec, std::uint64_t seed,
                          const std::function<void(const ParamSample&)>& probe = {});

/// Builds and compares both sides exactly (deviation must be 0).
IdentityReport check_formal(const IdentitySpec& spec, const ParamSample& sample, int order);

/// Builds and compares both sides with truncated sums.
IdentityReport check_numeric(const IdentitySpec& spec, const ParamSample& sample,
                             const Rational& eps, int order);

/// Runs every identity of the suite for config.trials trials. Reports are
/// sorted by (identity id, trial). Unknown suites throw ArgumentError.
std::vector<IdentityReport> run_suite(const std::string& suite, const VerifyConfig& config);

}  // namespace qhyper::verify
