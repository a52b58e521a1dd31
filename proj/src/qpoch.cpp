#include "qhyper/qpoch.hpp"

#include "qhyper/error.hpp"

namespace qhyper {

Rational qpoch(const Rational& a, const Rational& q, long n) {
  if (n < 0) throw ArgumentError("qpoch requires n >= 0");
  Rational result = 1;
  Rational aq = a;
  for (long k = 0; k < n; ++k) {
    result *= Rational(1) - aq;
    if (result.is_zero()) return result;
    aq *= q;
  }
  return result;
}

Rational qpoch_multi(std::span<const Rational> as, const Rational& q, long n) {
  Rational result = 1;
  for (const auto& a : as) {
    result *= qpoch(a, q, n);
    if (result.is_zero()) break;
  }
  return result;
}

Rational qfactorial(const Rational& q, long n) { return qpoch(q, q, n); }

InfiniteProduct qpoch_inf(const Rational& a, const Rational& q, const Rational& eps) {
  if (q.abs() >= Rational(1)) throw ArgumentError("qpoch_inf requires |q| < 1");
  if (eps.sign() <= 0) throw ArgumentError("qpoch_inf requires eps > 0");
  InfiniteProduct out{Rational(1), 0, Rational(0)};
  Rational aq = a;
  while (aq.abs() >= eps) {
    out.value *= Rational(1) - aq;
    aq *= q;
    ++out.factors;
  }
  // Remaining factors multiply the partial product by exp(s') with
  // |s'| <= 2 s, s = |a q^K| / (1 - |q|) < 1/2 for the eps used here.
  const Rational s = aq.abs() / (Rational(1) - q.abs());
  out.error_bound = out.value.abs() * Rational(4) * s;
  return out;
}

Rational qbinom(long n, long k, const Rational& q) {
  // For rational q, (q;q)_j vanishes only at q = 1 (j >= 1) or q = -1 (j >= 2).
  if ((q == Rational(1) && n >= 1) || (q == Rational(-1) && n >= 2)) {
    throw DomainError("q-binomial denominator vanishes at q = " + q.to_string());
  }
  if (k < 0 || k > n) return Rational(0);
  if (k > n - k) k = n - k;
  Rational num = 1, den = 1;
  Rational qn = q.pow(n - k + 1);
  Rational qj = q;
  for (long j = 1; j <= k; ++j) {
    num *= Rational(1) - qn;
    den *= Rational(1) - qj;
    qn *= q;
    qj *= q;
  }
  if (den.is_zero()) throw DomainError("q-binomial denominator vanishes at q = " + q.to_string());
  return num / den;
}

std::pair<Rational, Rational> qpoch_shift(const Rational& a, const Rational& q, long n) {
  if (a.is_zero()) throw DomainError("qpoch_shift requires a != 0");
  Rational lhs = qpoch(a * q.pow(-n), q, n);
  Rational rhs = qpoch(q / a, q, n) * (-a).pow(n) * q.pow(-n - binom2(n));
  return {lhs, rhs};
}

Rational bracket_power(long k, long e, const Rational& q) {
  Rational b = q.pow(binom2(k) * e);
  return ((k * e) % 2 != 0) ? -b : b;
}

}  // namespace qhyper
