#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "qhyper/error.hpp"
#include "qhyper/rational.hpp"

namespace qhyper {

/// Power series in t truncated after t^N. R must provide a default
/// constructor yielding zero, +, -, unary -, == and multiplication by a
/// Rational scalar.
template <class R>
class TruncSeries {
 public:
  explicit TruncSeries(int order = 0) : c_(static_cast<std::size_t>(order) + 1) {}
  TruncSeries(int order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(order) + 1);
  }

  static TruncSeries constant(int order, R value) {
    TruncSeries s(order);
    s.c_[0] = std::move(value);
    return s;
  }

  /// value * t^k (zero if k exceeds the order).
  static TruncSeries monomial(int order, int k, R value) {
    TruncSeries s(order);
    if (k <= order) s.c_[static_cast<std::size_t>(k)] = std::move(value);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  R& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<R>& coeffs() const { return c_; }

  TruncSeries truncated(int order) const {
    return TruncSeries(order, std::vector<R>(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), static_cast<std::size_t>(order) + 1)));
  }

  /// Multiplies by t^k, dropping terms beyond the order.
  TruncSeries shifted(int k) const {
    TruncSeries s(order());
    for (int n = 0; n + k <= order(); ++n) s[n + k] = (*this)[n];
    return s;
  }

  template <class F>
  auto map(F&& f) const -> TruncSeries<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    TruncSeries<S> out(order());
    for (int n = 0; n <= order(); ++n) out[n] = f((*this)[n]);
    return out;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries s(n);
    for (int i = 0; i <= n; ++i) s[i] = a[i] + b[i];
    return s;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries s(n);
    for (int i = 0; i <= n; ++i) s[i] = a[i] - b[i];
    return s;
  }
  TruncSeries operator-() const {
    TruncSeries s(order());
    for (int i = 0; i <= order(); ++i) s[i] = -(*this)[i];
    return s;
  }
  friend TruncSeries operator*(const Rational& k, const TruncSeries& a) {
    TruncSeries s(a.order());
    for (int i = 0; i <= a.order(); ++i) s[i] = a[i] * k;
    return s;
  }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<R> c_;
};

using RSeries = TruncSeries<Rational>;

/// Cauchy product truncated to min(order(a), order(b)).
RSeries operator*(const RSeries& a, const RSeries& b);

/// Multiplicative inverse; throws DomainError for a zero constant term.
RSeries series_inverse(const RSeries& f);

/// Horner evaluation of the truncated polynomial at t.
Rational evaluate(const RSeries& f, const Rational& t);

/// prod_{j<n} (1 - c q^j t), i.e. (ct;q)_n as a polynomial in t.
RSeries qpoch_series(const Rational& c, const Rational& q, long n, int order);

}  // namespace qhyper
