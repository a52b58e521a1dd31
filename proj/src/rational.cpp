#include "qhyper/rational.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>

#include "qhyper/error.hpp"

namespace qhyper {

namespace {

std::atomic<std::size_t> g_bit_limit{Rational::kDefaultBitLimit};

std::size_t bits_of(const mpz_class& z) {
  return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

}  // namespace

void Rational::set_bit_limit(std::size_t bits) { g_bit_limit.store(bits); }
std::size_t Rational::bit_limit() { return g_bit_limit.load(); }

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rational Rational::checked(mpq_class v) {
  const std::size_t limit = g_bit_limit.load(std::memory_order_relaxed);
  if (bits_of(v.get_num()) > limit || bits_of(v.get_den()) > limit) {
    throw MagnitudeError("rational exceeds bit limit of " + std::to_string(limit) + " bits");
  }
  Rational r;
  r.v_ = std::move(v);
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw ArgumentError("cannot parse empty string as rational");
  try {
    if (const auto dot = s.find('.'); dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      if (digits == "-" || digits.empty()) throw ArgumentError("bad decimal: " + s);
      const std::size_t frac = s.size() - dot - 1;
      mpz_class num(digits, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      mpq_class v(num, den);
      v.canonicalize();
      return checked(std::move(v));
    }
    mpq_class v(s, 10);
    if (sgn(v.get_den()) == 0) throw DomainError("rational with zero denominator: " + s);
    v.canonicalize();
    return checked(std::move(v));
  } catch (const std::invalid_argument&) {
    throw ArgumentError("cannot parse rational: " + s);
  }
}

Rational Rational::pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? checked(mpq_class(p)) : checked(mpq_class(mpz_class(1), p));
}

Rational operator+(const Rational& a, const Rational& b) { return Rational::checked(a.v_ + b.v_); }
Rational operator-(const Rational& a, const Rational& b) { return Rational::checked(a.v_ - b.v_); }
Rational operator*(const Rational& a, const Rational& b) { return Rational::checked(a.v_ * b.v_); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rational::checked(a.v_ / b.v_);
}
Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw DomainError("zero raised to a negative power");
    return inverse().pow(-e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return checked(mpq_class(num, den));
}

std::string Rational::numerator_string() const { return v_.get_num().get_str(10); }
std::string Rational::denominator_string() const { return v_.get_den().get_str(10); }

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

std::string Rational::to_decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = ::abs(v_.get_num()) * scale;
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), v_.get_den_mpz_t());
  std::string s = q.get_str(10);
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  std::string out = (sign() < 0 ? "-" : "") + s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  return out;
}

std::size_t Rational::bit_length() const {
  return std::max(bits_of(v_.get_num()), bits_of(v_.get_den()));
}

long Rational::floor_log2_abs() const {
  if (is_zero()) throw DomainError("log2 of zero");
  // |x| = n/d; start from the bit-length difference and correct by one.
  const mpz_class n = ::abs(v_.get_num());
  const mpz_class& d = v_.get_den();
  long e = static_cast<long>(bits_of(n)) - static_cast<long>(bits_of(d));
  // 2^e <= |x| < 2^(e+1) must hold; e is off by at most one.
  auto ge_pow = [&](long k) {  // |x| >= 2^k
    mpz_class lhs = n, rhs = d;
    if (k >= 0) rhs <<= static_cast<mp_bitcnt_t>(k);
    else lhs <<= static_cast<mp_bitcnt_t>(-k);
    return lhs >= rhs;
  };
  while (!ge_pow(e)) --e;
  while (ge_pow(e + 1)) ++e;
  return e;
}

Rational Rational::dyadic_upper_bound(int mantissa_bits) const {
  if (is_zero()) return Rational(0);
  const long e = floor_log2_abs();
  // |x| * 2^(mantissa_bits - 1 - e) lies in [2^(mb-1), 2^mb); take its ceiling.
  const long shift = mantissa_bits - 1 - e;
  mpz_class n = ::abs(v_.get_num());
  mpz_class d = v_.get_den();
  if (shift >= 0) n <<= static_cast<mp_bitcnt_t>(shift);
  else d <<= static_cast<mp_bitcnt_t>(-shift);
  mpz_class m;
  mpz_cdiv_q(m.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(m)) * pow2(-shift);
}

Rational Rational::round_to_grid(long bits) const {
  // floor(x 2^bits + 1/2) / 2^bits
  mpz_class n = v_.get_num();
  mpz_class d = v_.get_den();
  if (bits >= 0) n <<= static_cast<mp_bitcnt_t>(bits);
  else d <<= static_cast<mp_bitcnt_t>(-bits);
  n = 2 * n + d;
  d *= 2;
  mpz_class m;
  mpz_fdiv_q(m.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(m)) * pow2(-bits);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace qhyper
