#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qhyper/families.hpp"
#include "qhyper/qcontext.hpp"
#include "qhyper/rational.hpp"

namespace qhyper::verify {

/// Sampled values for one trial.
struct ParamSample {
  std::map<std::string, Rational> values;
  std::map<std::string, long> ints;
  ParamVector pv;
  std::uint64_t seed = 0;
  std::string derivation;

  const Rational& operator[](const std::string& name) const;
  long integer(const std::string& name) const;
  void set(const std::string& name, Rational v) { values[name] = std::move(v); }
  std::string describe() const;
};

/// Outcome of one identity check on one sample.
struct IdentityReport {
  std::string id;
  Mode mode = Mode::Formal;
  std::uint64_t seed = 0;
  int trial = 0;
  ParamSample sample;
  int order = 0;
  Rational epsilon;
  /// Formal: exact max |lhs - rhs|. Numeric: dyadic upper bound of the
  /// relative deviation max |lhs - rhs| / max(1, |lhs|).
  Rational deviation;
  bool pass = false;
  bool errored = false;
  std::string notes;
};

/// Numeric pass threshold on the relative deviation.
Rational numeric_tolerance();

bool all_pass(const std::vector<IdentityReport>& reports);

}  // namespace qhyper::verify
