#include "qhyper/products.hpp"

#include "qhyper/families.hpp"
#include "qhyper/qpoch.hpp"

namespace qhyper {

RSeries operator*(const RSeries& a, const RSeries& b) {
  const int n = std::min(a.order(), b.order());
  RSeries s(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) s[i + j] += a[i] * b[j];
    }
  }
  return s;
}

RSeries series_inverse(const RSeries& f) {
  if (f[0].is_zero()) throw DomainError("series_inverse: constant term is zero");
  const Rational inv0 = f[0].inverse();
  RSeries g(f.order());
  g[0] = inv0;
  for (int n = 1; n <= f.order(); ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i) {
      if (!f[i].is_zero()) acc += f[i] * g[n - i];
    }
    g[n] = -acc * inv0;
  }
  return g;
}

Rational evaluate(const RSeries& f, const Rational& t) {
  Rational acc = 0;
  for (int n = f.order(); n >= 0; --n) acc = acc * t + f[n];
  return acc;
}

RSeries qpoch_series(const Rational& c, const Rational& q, long n, int order) {
  RSeries s = RSeries::constant(order, Rational(1));
  Rational cq = c;
  for (long j = 0; j < n; ++j) {
    // multiply in place by (1 - cq t)
    for (int i = order; i >= 1; --i) s[i] -= cq * s[i - 1];
    cq *= q;
  }
  return s;
}

RSeries euler_product_series(const Rational& c, const Rational& q, int order) {
  RSeries s(order);
  Rational term = 1;  // (-1)^k q^{binom(k,2)} c^k / (q;q)_k
  for (int k = 0; k <= order; ++k) {
    s[k] = term;
    const Rational qk = q.pow(k);
    term = -term * qk * c / (Rational(1) - qk * q);
  }
  return s;
}

RSeries euler_inverse_series(const Rational& c, const Rational& q, int order) {
  RSeries s(order);
  Rational term = 1;
  Rational qk1 = q;
  for (int k = 0; k <= order; ++k) {
    s[k] = term;
    term = term * c / (Rational(1) - qk1);
    qk1 *= q;
  }
  return s;
}

RSeries cauchy_ratio_series(const Rational& x, const Rational& y, const Rational& q, int order) {
  RSeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = cauchy_P(n, x, y, q) / qfactorial(q, n);
  return s;
}

}  // namespace qhyper
