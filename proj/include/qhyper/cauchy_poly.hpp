#pragma once

#include <functional>
#include <map>

#include "qhyper/families.hpp"
#include "qhyper/series.hpp"

namespace qhyper {

/// Finite combination sum_m c_m P_m(y,x) in the Cauchy basis. The base q is
/// not stored; operations that depend on it take q explicitly.
class CauchyPoly {
 public:
  CauchyPoly() = default;

  /// coeff * P_m(y,x).
  static CauchyPoly basis(long m, Rational coeff = 1);

  const std::map<long, Rational>& terms() const { return c_; }
  Rational coeff(long m) const;
  /// Largest m with c_m != 0, or -1 for the zero element.
  long degree() const;
  bool is_zero() const { return c_.empty(); }

  /// sum_m c_m P_m(y0, x0).
  Rational evaluate(const Rational& x0, const Rational& y0, const Rational& q) const;

  friend CauchyPoly operator+(const CauchyPoly& a, const CauchyPoly& b);
  friend CauchyPoly operator-(const CauchyPoly& a, const CauchyPoly& b);
  CauchyPoly operator-() const;
  friend CauchyPoly operator*(const CauchyPoly& a, const Rational& k);
  friend bool operator==(const CauchyPoly& a, const CauchyPoly& b) { return a.c_ == b.c_; }
  CauchyPoly& operator+=(const CauchyPoly& b) { return *this = *this + b; }

  /// Adds k * P_m(y,x) in place.
  void add_term(long m, const Rational& k);

 private:
  std::map<long, Rational> c_;  // zero coefficients are never stored
};

using CauchySeries = TruncSeries<CauchyPoly>;

/// Theta_xy^k via Theta^k P_n(y,x) = (-1)^k (q;q)_n/(q;q)_{n-k} P_{n-k}(y,x).
CauchyPoly theta_basis(const CauchyPoly& f, long k, const Rational& q);

using PointFunction = std::function<Rational(const Rational&, const Rational&)>;

/// [f(x0/q, y0) - f(x0, q y0)] / (x0/q - y0). Throws DomainError when
/// x0/q = y0.
Rational theta_pointwise(const PointFunction& f, const Rational& x0, const Rational& y0,
                         const Rational& q);

/// k-fold nested application of theta_pointwise.
Rational theta_pointwise_power(const PointFunction& f, long k, const Rational& x0,
                               const Rational& y0, const Rational& q);

/// rPhis[a;b;q;-z Theta_xy] applied to a Cauchy-basis polynomial.
CauchyPoly op_apply_poly(const ParamVector& pv, const Rational& z, const CauchyPoly& f,
                         const Rational& q);

/// Coefficientwise op_apply_poly on a series in t.
CauchySeries op_apply_series(const ParamVector& pv, const Rational& z, const CauchySeries& f,
                             const Rational& q);

/// Series whose t^n coefficient is P_{n+k}(y,x)/(q;q)_n; k = 0 gives
/// (xt;q)_inf/(yt;q)_inf.
CauchySeries shifted_cauchy_series(long k, const Rational& q, int order);

/// Applies Theta^k to every coefficient.
CauchySeries theta_series(const CauchySeries& f, long k, const Rational& q);

/// Evaluates every coefficient at (x0, y0).
RSeries evaluate(const CauchySeries& f, const Rational& x0, const Rational& y0, const Rational& q);

}  // namespace qhyper
