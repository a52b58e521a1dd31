#include "qhyper/verify/report.hpp"

#include "qhyper/error.hpp"

namespace qhyper::verify {

const Rational& ParamSample::operator[](const std::string& name) const {
  const auto it = values.find(name);
  if (it == values.end()) throw ArgumentError("sample has no symbol '" + name + "'");
  return it->second;
}

long ParamSample::integer(const std::string& name) const {
  const auto it = ints.find(name);
  if (it == ints.end()) throw ArgumentError("sample has no integer '" + name + "'");
  return it->second;
}

std::string ParamSample::describe() const {
  std::string s;
  for (const auto& [k, v] : values) s += (s.empty() ? "" : " ") + k + "=" + v.to_string();
  for (const auto& [k, v] : ints) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  if (!pv.upper.empty() || !pv.lower.empty()) s += (s.empty() ? "" : " ") + std::string("pv=") + pv.to_string();
  return s;
}

Rational numeric_tolerance() { return Rational::pow2(-40); }

bool all_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace qhyper::verify
