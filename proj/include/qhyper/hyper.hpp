#pragma once

#include "qhyper/families.hpp"
#include "qhyper/series.hpp"
#include "qhyper/summation.hpp"

namespace qhyper {

/// Term convention for rPhis. Bracket multiplies term k by
/// [(-1)^k q^{binom(k,2)}]^{1+s-r}; Plain omits that factor.
enum class Convention { Bracket, Plain };

/// Coefficient of z^k in rPhis[a;b;q;z].
Rational hyper_coefficient(long k, const ParamVector& pv, const Rational& q,
                           Convention conv = Convention::Bracket);

/// If some upper parameter equals q^{-n} (n >= 0), returns the smallest
/// such n; otherwise -1.
long terminating_index(const ParamVector& pv, const Rational& q);

/// Exact value of a terminating series. Throws ArgumentError if no upper
/// parameter has the form q^{-n}.
Rational rphis_terminating(const ParamVector& pv, const Rational& q, const Rational& z,
                           Convention conv = Convention::Bracket);

/// rPhis[a;b;q;ct] as a truncated series in t.
RSeries rphis_series_in_t(const ParamVector& pv, const Rational& q, const Rational& c, int order,
                          Convention conv = Convention::Bracket);

/// Convergent evaluation by exact partial sums. Throws ConvergenceError for
/// a non-terminating series with r > s+1, or r = s+1 and |z| >= 1.
NumericSum rphis_numeric(const ParamVector& pv, const Rational& q, const Rational& z,
                         const SumControl& ctl, Convention conv = Convention::Bracket);

}  // namespace qhyper
