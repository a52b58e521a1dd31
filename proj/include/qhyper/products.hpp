#pragma once

#include "qhyper/series.hpp"

namespace qhyper {

/// (ct;q)_inf: coefficient of t^k is (-1)^k q^{binom(k,2)} c^k / (q;q)_k.
RSeries euler_product_series(const Rational& c, const Rational& q, int order);

/// 1/(ct;q)_inf: coefficient of t^k is c^k / (q;q)_k.
RSeries euler_inverse_series(const Rational& c, const Rational& q, int order);

/// (yt;q)_inf / (xt;q)_inf: coefficient of t^n is P_n(x,y) / (q;q)_n.
RSeries cauchy_ratio_series(const Rational& x, const Rational& y, const Rational& q, int order);

}  // namespace qhyper
