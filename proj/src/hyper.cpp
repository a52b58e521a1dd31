#include "qhyper/hyper.hpp"

#include "qhyper/error.hpp"
#include "qhyper/qpoch.hpp"

namespace qhyper {

namespace {

long effective_exponent(const ParamVector& pv, Convention conv) {
  return conv == Convention::Bracket ? pv.bracket_exponent() : 0;
}

// Ratio of consecutive coefficients c_{k+1}/c_k (without the z power).
Rational coefficient_ratio(long k, const ParamVector& pv, const Rational& q, const Rational& qk,
                           long e) {
  Rational num = 1, den = Rational(1) - qk * q;
  for (const auto& a : pv.upper) num *= Rational(1) - a * qk;
  for (std::size_t j = 0; j < pv.lower.size(); ++j) {
    const Rational f = Rational(1) - pv.lower[j] * qk;
    if (f.is_zero()) {
      throw DomainError("lower parameter b" + std::to_string(j + 1) + " = " + pv.lower[j].to_string() +
                        " makes (b;q)_" + std::to_string(k + 1) + " vanish");
    }
    den *= f;
  }
  // [(-1)^{k+1} q^{binom(k+1,2)}]^e / [(-1)^k q^{binom(k,2)}]^e = (-q^k)^e
  Rational b = qk.pow(e);
  if (e % 2 != 0) b = -b;
  return num / den * b;
}

}  // namespace

Rational hyper_coefficient(long k, const ParamVector& pv, const Rational& q, Convention conv) {
  return W_coeff(k, pv, q) / qfactorial(q, k) * bracket_power(k, effective_exponent(pv, conv), q);
}

long terminating_index(const ParamVector& pv, const Rational& q) {
  long best = -1;
  for (const auto& a : pv.upper) {
    if (a.is_zero()) continue;
    Rational p = 1;
    const std::size_t cap = a.bit_length() + q.bit_length() + 2;
    for (long n = 0;; ++n) {
      if (p == a) {
        if (best < 0 || n < best) best = n;
        break;
      }
      p /= q;
      if (p.bit_length() > cap || n > 100000) break;
    }
  }
  return best;
}

Rational rphis_terminating(const ParamVector& pv, const Rational& q, const Rational& z,
                           Convention conv) {
  const long n = terminating_index(pv, q);
  if (n < 0) throw ArgumentError("rphis_terminating: no upper parameter of the form q^{-n}");
  const long e = effective_exponent(pv, conv);
  Rational sum = 0, term = 1, qk = 1;
  for (long k = 0; k <= n; ++k) {
    sum += term;
    if (k < n) {
      term *= coefficient_ratio(k, pv, q, qk, e) * z;
      qk *= q;
    }
  }
  return sum;
}

RSeries rphis_series_in_t(const ParamVector& pv, const Rational& q, const Rational& c, int order,
                          Convention conv) {
  const long e = effective_exponent(pv, conv);
  RSeries s(order);
  Rational term = 1, qk = 1;
  for (int k = 0; k <= order; ++k) {
    s[k] = term;
    if (term.is_zero()) continue;  // terminated; later coefficients stay 0
    if (k < order) {
      term *= coefficient_ratio(k, pv, q, qk, e) * c;
      qk *= q;
    }
  }
  return s;
}

NumericSum rphis_numeric(const ParamVector& pv, const Rational& q, const Rational& z,
                         const SumControl& ctl, Convention conv) {
  const long n = terminating_index(pv, q);
  if (n >= 0) return {rphis_terminating(pv, q, z, conv), Rational(0), n + 1};
  if (z.is_zero()) return {Rational(1), Rational(0), 1};
  const long e = effective_exponent(pv, conv);
  if (e < 0 || (e == 0 && q.abs() < Rational(1) && z.abs() >= Rational(1))) {
    throw ConvergenceError("divergent series: r=" + std::to_string(pv.r()) + ", s=" +
                           std::to_string(pv.s()) + ", z=" + z.to_string());
  }
  if (q.abs() >= Rational(1)) throw ConvergenceError("numeric rPhis requires |q| < 1");
  Rational term = 1, qk = 1;
  long next = 0;
  return sum_series(
      [&](long k) {
        // Terms are requested in order 0, 1, 2, ...
        while (next < k) {
          term *= coefficient_ratio(next, pv, q, qk, e) * z;
          qk *= q;
          ++next;
        }
        return term;
      },
      ctl);
}

}  // namespace qhyper
