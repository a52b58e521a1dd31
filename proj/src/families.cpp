#include "qhyper/families.hpp"

#include "qhyper/error.hpp"
#include "qhyper/qpoch.hpp"

namespace qhyper {

namespace {

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s;
}

// Ratio W_{k+1}/W_k, or a DomainError if a lower factor vanishes at step k.
Rational w_step(long k, const ParamVector& pv, const Rational& qk) {
  Rational num = 1, den = 1;
  for (const auto& a : pv.upper) num *= Rational(1) - a * qk;
  for (std::size_t j = 0; j < pv.lower.size(); ++j) {
    const Rational f = Rational(1) - pv.lower[j] * qk;
    if (f.is_zero()) {
      throw DomainError("lower parameter b" + std::to_string(j + 1) + " = " + pv.lower[j].to_string() +
                        " makes (b;q)_" + std::to_string(k + 1) + " vanish");
    }
    den *= f;
  }
  return num / den;
}

// W_0..W_n.
std::vector<Rational> w_table(long n, const ParamVector& pv, const Rational& q) {
  std::vector<Rational> w{Rational(1)};
  Rational qk = 1;
  for (long k = 0; k < n; ++k) {
    w.push_back(w.back() * w_step(k, pv, qk));
    qk *= q;
  }
  return w;
}

// (-1)^n q^{-binom(n,2)}
Rational sign_qpow(long n, const Rational& q) { return bracket_power(n, -1, q); }

Rational lower_poch(const Rational& d, const Rational& q, long k, const char* name) {
  const Rational p = qpoch(d, q, k);
  if (p.is_zero()) {
    throw DomainError(std::string("lower parameter ") + name + " = " + d.to_string() + " makes (" + name +
                      ";q)_" + std::to_string(k) + " vanish");
  }
  return p;
}

}  // namespace

std::string ParamVector::to_string() const { return "(" + join(upper) + ";" + join(lower) + ")"; }

std::vector<Rational> qbinom_row(long n, const Rational& q) {
  std::vector<Rational> row{Rational(1)};
  Rational qnk = q.pow(n);  // q^{n-k}
  const Rational qinv = q.inverse();
  Rational qk1 = q;         // q^{k+1}
  for (long k = 0; k < n; ++k) {
    const Rational den = Rational(1) - qk1;
    if (den.is_zero()) throw DomainError("q-binomial denominator vanishes");
    row.push_back(row.back() * (Rational(1) - qnk) / den);
    qnk *= qinv;
    qk1 *= q;
  }
  return row;
}

Rational cauchy_P(long n, const Rational& x, const Rational& y, const Rational& q) {
  Rational result = 1;
  Rational qy = y;
  for (long i = 0; i < n; ++i) {
    result *= x - qy;
    qy *= q;
  }
  return result;
}

Rational W_coeff(long k, const ParamVector& pv, const Rational& q) {
  Rational num = qpoch_multi(pv.upper, q, k);
  Rational den = 1;
  for (std::size_t j = 0; j < pv.lower.size(); ++j) {
    const Rational p = qpoch(pv.lower[j], q, k);
    if (p.is_zero()) {
      throw DomainError("lower parameter b" + std::to_string(j + 1) + " = " + pv.lower[j].to_string() +
                        " makes (b;q)_" + std::to_string(k) + " vanish");
    }
    den *= p;
  }
  return num / den;
}

Rational psi_general(long n, const ParamVector& pv, const Rational& x, const Rational& y,
                     const Rational& z, const Rational& q) {
  const long e = pv.bracket_exponent();
  const auto row = qbinom_row(n, q);
  const auto w = w_table(n, pv, q);
  // P_m(y,x) for m = 0..n
  std::vector<Rational> p{Rational(1)};
  Rational qx = x;
  for (long m = 0; m < n; ++m) {
    p.push_back(p.back() * (y - qx));
    qx *= q;
  }
  Rational sum = 0;
  Rational zk = 1;
  for (long k = 0; k <= n; ++k) {
    if (!w[k].is_zero() && !p[n - k].is_zero()) {
      sum += row[k] * bracket_power(k, e, q) * w[k] * p[n - k] * zk;
    }
    zk *= z;
  }
  return sign_qpow(n, q) * sum;
}

Rational psi_general(const FamilyPoint& pt, const ParamVector& pv, const Rational& q) {
  return psi_general(pt.n, pv, pt.x, pt.y, pt.z, q);
}

Rational asc_phi(long n, const Rational& a, const Rational& x, const Rational& q) {
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) sum += row[k] * qpoch(a, q, k) * x.pow(k);
  return sum;
}

Rational asc_psi(long n, const Rational& a, const Rational& x, const Rational& q) {
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) {
    sum += row[k] * q.pow(k * (k - n)) * qpoch(a * q.pow(1 - k), q, k) * x.pow(k);
  }
  return sum;
}

Rational cao_phi3(long n, const Rational& a, const Rational& b, const Rational& c,
                  const Rational& x, const Rational& y, const Rational& q) {
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) {
    sum += row[k] * qpoch(a, q, k) * qpoch(b, q, k) / lower_poch(c, q, k, "c") * x.pow(k) * y.pow(n - k);
  }
  return sum;
}

Rational cao_psi3(long n, const Rational& a, const Rational& b, const Rational& c,
                  const Rational& x, const Rational& y, const Rational& q) {
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) {
    const Rational sgn = (k % 2 == 0) ? Rational(1) : Rational(-1);
    sum += row[k] * sgn * q.pow(binom2(k + 1) - n * k) * qpoch(a, q, k) * qpoch(b, q, k) /
           lower_poch(c, q, k, "c") * x.pow(k) * y.pow(n - k);
  }
  return sum;
}

Rational ext_phi5(long n, const Rational& a, const Rational& b, const Rational& c,
                  const Rational& d, const Rational& e, const Rational& x, const Rational& y,
                  const Rational& q) {
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) {
    sum += row[k] * qpoch(a, q, k) * qpoch(b, q, k) * qpoch(c, q, k) /
           (lower_poch(d, q, k, "d") * lower_poch(e, q, k, "e")) * x.pow(n - k) * y.pow(k);
  }
  return sum;
}

Rational ext_psi5(long n, const Rational& a, const Rational& b, const Rational& c,
                  const Rational& d, const Rational& e, const Rational& x, const Rational& y,
                  const Rational& q) {
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) {
    const Rational sgn = (k % 2 == 0) ? Rational(1) : Rational(-1);
    sum += row[k] * sgn * q.pow(k * (k - n)) * qpoch(a, q, k) * qpoch(b, q, k) * qpoch(c, q, k) /
           (lower_poch(d, q, k, "d") * lower_poch(e, q, k, "e")) * x.pow(n - k) * y.pow(k);
  }
  return sum;
}

namespace {

void require_sa_arity(const ParamVector& pv) {
  if (pv.r() != pv.s() + 1) {
    throw ArgumentError("expected r+1 upper and r lower parameters, got " + std::to_string(pv.r()) +
                        " and " + std::to_string(pv.s()));
  }
}

}  // namespace

Rational sa_phi(long n, const ParamVector& pv, const Rational& x, const Rational& y,
                const Rational& q) {
  require_sa_arity(pv);
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) sum += row[k] * W_coeff(k, pv, q) * x.pow(k) * y.pow(n - k);
  return sum;
}

Rational sa_psi(long n, const ParamVector& pv, const Rational& x, const Rational& y,
                const Rational& q) {
  require_sa_arity(pv);
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) {
    sum += row[k] * W_coeff(k, pv, q) * q.pow(binom2(k + 1) - n * k) * x.pow(k) * y.pow(n - k);
  }
  return sum;
}

Rational v_poly(long n, const ParamVector& pv, const Rational& x, const Rational& y,
                const Rational& z, const Rational& q) {
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) sum += row[k] * W_coeff(k, pv, q) * cauchy_P(n - k, x, y, q) * z.pow(k);
  return sum;
}

Rational trivariate_F(long n, const Rational& x, const Rational& y, const Rational& z,
                      const Rational& q) {
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) {
    const Rational sgn = (k % 2 == 0) ? Rational(1) : Rational(-1);
    sum += row[k] * sgn * q.pow(binom2(k)) * z.pow(k) * cauchy_P(n - k, y, x, q);
  }
  return sign_qpow(n, q) * sum;
}

Rational hahn_h(long n, const Rational& x, const Rational& y, const Rational& a,
                const Rational& b, const Rational& q) {
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) sum += row[k] * qpoch(a, q, k) * b.pow(k) * cauchy_P(n - k, x, y, q);
  return sum;
}

Rational hahn2_phi(long n, const Rational& a, const Rational& x, const Rational& y,
                   const Rational& q) {
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) sum += row[k] * qpoch(a, q, k) * x.pow(k) * y.pow(n - k);
  return sum;
}

Rational hahn2_psi(long n, const Rational& a, const Rational& x, const Rational& y,
                   const Rational& q) {
  const auto row = qbinom_row(n, q);
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) {
    sum += row[k] * q.pow(k * (k - n)) * qpoch(a * q.pow(1 - k), q, k) * x.pow(k) * y.pow(n - k);
  }
  return sum;
}

}  // namespace qhyper
