#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qhyper {

/// Exact rational number backed by GMP. Always canonical (lowest terms,
/// positive denominator). Every arithmetic result is checked against a
/// process-wide bit-length limit and throws MagnitudeError when exceeded.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : v_(static_cast<long>(value)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpq_class& v);

  /// Parses "p", "p/q", or a plain decimal such as "-0.125".
  static Rational parse(std::string_view text);

  /// 2^e for any integer e.
  static Rational pow2(long e);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws DomainError on a zero divisor.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const;
  Rational inverse() const;
  /// Integer power; negative exponents invert (DomainError on 0^-n).
  Rational pow(long e) const;

  std::string numerator_string() const;
  std::string denominator_string() const;
  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Truncated decimal expansion with `digits` fractional digits.
  std::string to_decimal(int digits = 20) const;
  double to_double() const { return v_.get_d(); }

  /// max(bits(numerator), bits(denominator)).
  std::size_t bit_length() const;

  /// floor(log2 |x|) for x != 0.
  long floor_log2_abs() const;

  /// Smallest dyadic m/2^k with m of at most `mantissa_bits` bits and
  /// m/2^k >= |x|. Used to print compact upper bounds.
  Rational dyadic_upper_bound(int mantissa_bits = 53) const;

  /// Nearest multiple of 2^-bits (ties round up); error at most 2^-(bits+1).
  Rational round_to_grid(long bits) const;

  const mpq_class& raw() const { return v_; }

  static void set_bit_limit(std::size_t bits);
  static std::size_t bit_limit();
  static constexpr std::size_t kDefaultBitLimit = std::size_t{1} << 16;

 private:
  static Rational checked(mpq_class v);
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qhyper
