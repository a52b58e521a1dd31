// Helpers shared by the catalog sources.
#pragma once

#include <string>
#include <vector>

#include "qhyper/cauchy_poly.hpp"
#include "qhyper/hyper.hpp"
#include "qhyper/products.hpp"
#include "qhyper/qpoch.hpp"
#include "qhyper/verify/engine.hpp"

namespace qhyper::verify::detail {

inline std::vector<Rational> coeffs(const RSeries& s) { return s.coeffs(); }

/// Random parameter vector with r, s drawn from [0, max_rs].
inline void draw_params(Sampler& sm, ParamSample& p, long max_rs = 3) {
  const long r = sm.uniform_int(0, max_rs);
  const long s = sm.uniform_int(0, max_rs);
  p.ints["r"] = r;
  p.ints["s"] = s;
  p.pv = sm.params(r, s);
}

/// Exact max |a_i - b_i| as a short decimal for notes.
inline std::string residual_text(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational m = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const Rational d = (a[i] - b[i]).abs();
    if (d > m) m = d;
  }
  if (m.is_zero()) return "0";
  return m.dyadic_upper_bound(24).to_decimal(12) + " (bound)";
}

inline bool all_equal(const std::vector<Rational>& a, const std::vector<Rational>& b) { return a == b; }

}  // namespace qhyper::verify::detail
