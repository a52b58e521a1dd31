#pragma once

#include <span>
#include <utility>

#include "qhyper/rational.hpp"

namespace qhyper {

/// n(n-1)/2 for any integer n.
constexpr long binom2(long n) { return n * (n - 1) / 2; }

/// (a;q)_n for n >= 0.
Rational qpoch(const Rational& a, const Rational& q, long n);

/// (a_1,...,a_r;q)_n; 1 for an empty list.
Rational qpoch_multi(std::span<const Rational> as, const Rational& q, long n);

/// (q;q)_n.
Rational qfactorial(const Rational& q, long n);

/// Truncated infinite product.
struct InfiniteProduct {
  Rational value;        ///< prod_{k<factors} (1 - a q^k)
  long factors = 0;      ///< K, the smallest index with |a q^K| < eps
  Rational error_bound;  ///< bound on |(a;q)_inf - value|
};

/// (a;q)_inf truncated at the first K with |a q^K| < eps. Throws
/// ArgumentError unless |q| < 1.
InfiniteProduct qpoch_inf(const Rational& a, const Rational& q, const Rational& eps);

/// [n k]_q; 0 when k < 0 or k > n. Throws DomainError if some (q;q)_j
/// with j <= n vanishes.
Rational qbinom(long n, long k, const Rational& q);

/// Both sides of (a q^{-n};q)_n = (q/a;q)_n (-a)^n q^{-n-binom(n,2)}.
/// Throws DomainError when a = 0.
std::pair<Rational, Rational> qpoch_shift(const Rational& a, const Rational& q, long n);

/// (-1)^k q^{binom(k,2)} raised to an integer power e.
Rational bracket_power(long k, long e, const Rational& q);

}  // namespace qhyper
