#pragma once

#include <functional>
#include <vector>

#include "qhyper/rational.hpp"
#include "qhyper/series.hpp"

namespace qhyper {

/// Truncation policy for numerically summed series.
struct SumControl {
  Rational eps = Rational::pow2(-80);
  long k_min = 8;
  long max_terms = 10000;
  /// Terms are rounded to multiples of 2^-grid_bits before they are added,
  /// which keeps partial sums compact. The accumulated rounding error is
  /// included in the tail bound. The grid does not depend on eps, so a
  /// smaller eps only appends terms to the same partial sum.
  long grid_bits = 1024;
};

/// Exact partial sum of a convergent series with its tail estimate.
struct NumericSum {
  Rational value;
  Rational tail_bound;
  long terms = 0;
};

/// Sums term(0), term(1), ... and stops at the first k >= k_min where
/// |term(k)| and |term(k+1)| are both below eps (both are included). The
/// tail bound is |term(k+1)| rho/(1-rho), rho the larger of the last two
/// term ratios capped at 9/10. Throws ConvergenceError after max_terms.
NumericSum sum_series(const std::function<Rational(long)>& term, const SumControl& ctl);

/// Same rule for series-valued terms, measured in the max-norm of the
/// coefficients.
struct NumericSeriesSum {
  RSeries value;
  Rational tail_bound;
  long terms = 0;
};
NumericSeriesSum sum_series(const std::function<RSeries(long)>& term, int order,
                            const SumControl& ctl);

/// max_i |c_i|.
Rational max_norm(const RSeries& s);

}  // namespace qhyper
