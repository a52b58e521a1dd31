#include "qhyper/cauchy_poly.hpp"

#include "qhyper/error.hpp"
#include "qhyper/qpoch.hpp"

namespace qhyper {

CauchyPoly CauchyPoly::basis(long m, Rational coeff) {
  CauchyPoly p;
  p.add_term(m, coeff);
  return p;
}

void CauchyPoly::add_term(long m, const Rational& k) {
  if (m < 0) throw ArgumentError("Cauchy basis index must be nonnegative");
  if (k.is_zero()) return;
  auto [it, inserted] = c_.try_emplace(m, k);
  if (!inserted) {
    it->second += k;
    if (it->second.is_zero()) c_.erase(it);
  }
}

Rational CauchyPoly::coeff(long m) const {
  const auto it = c_.find(m);
  return it == c_.end() ? Rational(0) : it->second;
}

long CauchyPoly::degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

Rational CauchyPoly::evaluate(const Rational& x0, const Rational& y0, const Rational& q) const {
  Rational sum = 0;
  Rational p = 1;  // P_m(y0, x0), built incrementally
  Rational qx = x0;
  long m = 0;
  for (const auto& [deg, c] : c_) {
    for (; m < deg; ++m) {
      p *= y0 - qx;
      qx *= q;
    }
    sum += c * p;
  }
  return sum;
}

CauchyPoly operator+(const CauchyPoly& a, const CauchyPoly& b) {
  CauchyPoly r = a;
  for (const auto& [m, c] : b.c_) r.add_term(m, c);
  return r;
}

CauchyPoly operator-(const CauchyPoly& a, const CauchyPoly& b) { return a + (-b); }

CauchyPoly CauchyPoly::operator-() const {
  CauchyPoly r;
  for (const auto& [m, c] : c_) r.c_.emplace(m, -c);
  return r;
}

CauchyPoly operator*(const CauchyPoly& a, const Rational& k) {
  CauchyPoly r;
  if (k.is_zero()) return r;
  for (const auto& [m, c] : a.c_) r.c_.emplace(m, c * k);
  return r;
}

CauchyPoly theta_basis(const CauchyPoly& f, long k, const Rational& q) {
  if (k < 0) throw ArgumentError("theta power must be nonnegative");
  CauchyPoly out;
  const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  for (const auto& [n, c] : f.terms()) {
    if (n < k) continue;
    out.add_term(n - k, c * sign * qfactorial(q, n) / qfactorial(q, n - k));
  }
  return out;
}

Rational theta_pointwise(const PointFunction& f, const Rational& x0, const Rational& y0,
                         const Rational& q) {
  const Rational xq = x0 / q;
  const Rational den = xq - y0;
  if (den.is_zero()) throw DomainError("theta_pointwise: singular point x/q = y");
  return (f(xq, y0) - f(x0, q * y0)) / den;
}

Rational theta_pointwise_power(const PointFunction& f, long k, const Rational& x0,
                               const Rational& y0, const Rational& q) {
  if (k == 0) return f(x0, y0);
  PointFunction inner = [&](const Rational& x, const Rational& y) {
    return theta_pointwise_power(f, k - 1, x, y, q);
  };
  return theta_pointwise(inner, x0, y0, q);
}

CauchyPoly op_apply_poly(const ParamVector& pv, const Rational& z, const CauchyPoly& f,
                         const Rational& q) {
  // W_k (-z)^k / (q;q)_k [..]^{1+s-r} Theta^k P_n = W_k z^k [..]^{1+s-r} [n k] P_{n-k}.
  const long deg = f.degree();
  if (deg < 0) return {};
  const long e = pv.bracket_exponent();
  std::vector<Rational> wk;
  wk.reserve(static_cast<std::size_t>(deg) + 1);
  Rational zk = 1;
  for (long k = 0; k <= deg; ++k) {
    wk.push_back(W_coeff(k, pv, q) * zk * bracket_power(k, e, q));
    zk *= z;
  }
  CauchyPoly out;
  for (const auto& [n, c] : f.terms()) {
    const auto row = qbinom_row(n, q);
    for (long k = 0; k <= n; ++k) {
      if (!wk[k].is_zero()) out.add_term(n - k, c * wk[k] * row[k]);
    }
  }
  return out;
}

CauchySeries op_apply_series(const ParamVector& pv, const Rational& z, const CauchySeries& f,
                             const Rational& q) {
  return f.map([&](const CauchyPoly& c) { return op_apply_poly(pv, z, c, q); });
}

CauchySeries shifted_cauchy_series(long k, const Rational& q, int order) {
  CauchySeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = CauchyPoly::basis(n + k, qfactorial(q, n).inverse());
  return s;
}

CauchySeries theta_series(const CauchySeries& f, long k, const Rational& q) {
  return f.map([&](const CauchyPoly& c) { return theta_basis(c, k, q); });
}

RSeries evaluate(const CauchySeries& f, const Rational& x0, const Rational& y0, const Rational& q) {
  return f.map([&](const CauchyPoly& c) { return c.evaluate(x0, y0, q); });
}

}  // namespace qhyper
