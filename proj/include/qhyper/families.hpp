#pragma once

#include <string>
#include <vector>

#include "qhyper/rational.hpp"

namespace qhyper {

/// Upper parameters (a_1..a_r) and lower parameters (b_1..b_s).
struct ParamVector {
  std::vector<Rational> upper;
  std::vector<Rational> lower;

  long r() const { return static_cast<long>(upper.size()); }
  long s() const { return static_cast<long>(lower.size()); }
  /// Exponent 1+s-r of the (-1)^k q^{binom(k,2)} factor.
  long bracket_exponent() const { return 1 + s() - r(); }
  std::string to_string() const;
};

struct FamilyPoint {
  Rational x, y, z;
  long n = 0;
};

/// P_n(x,y) = (x-y)(x-qy)...(x-q^{n-1}y).
Rational cauchy_P(long n, const Rational& x, const Rational& y, const Rational& q);

/// W_k = (a_1..a_r;q)_k / (b_1..b_s;q)_k. Throws DomainError naming the
/// lower parameter whose Pochhammer symbol vanishes.
Rational W_coeff(long k, const ParamVector& pv, const Rational& q);

/// Psi_n^{(a,b)}(x,y,z|q).
Rational psi_general(const FamilyPoint& pt, const ParamVector& pv, const Rational& q);
Rational psi_general(long n, const ParamVector& pv, const Rational& x, const Rational& y,
                     const Rational& z, const Rational& q);

/// Al-Salam-Carlitz (Hahn) polynomials phi_n^{(a)}(x|q), psi_n^{(a)}(x|q).
Rational asc_phi(long n, const Rational& a, const Rational& x, const Rational& q);
Rational asc_psi(long n, const Rational& a, const Rational& x, const Rational& q);

/// Three-parameter families phi_n^{(a,b,c)}(x,y|q), psi_n^{(a,b,c)}(x,y|q).
Rational cao_phi3(long n, const Rational& a, const Rational& b, const Rational& c,
                  const Rational& x, const Rational& y, const Rational& q);
Rational cao_psi3(long n, const Rational& a, const Rational& b, const Rational& c,
                  const Rational& x, const Rational& y, const Rational& q);

/// Five-parameter extensions with (a,b,c;q)_k/(d,e;q)_k x^{n-k} y^k.
Rational ext_phi5(long n, const Rational& a, const Rational& b, const Rational& c,
                  const Rational& d, const Rational& e, const Rational& x, const Rational& y,
                  const Rational& q);
Rational ext_psi5(long n, const Rational& a, const Rational& b, const Rational& c,
                  const Rational& d, const Rational& e, const Rational& x, const Rational& y,
                  const Rational& q);

/// Families with r+1 upper and r lower parameters. Throws ArgumentError
/// on any other arity.
Rational sa_phi(long n, const ParamVector& pv, const Rational& x, const Rational& y,
                const Rational& q);
Rational sa_psi(long n, const ParamVector& pv, const Rational& x, const Rational& y,
                const Rational& q);

/// V_n^{(a,c)}(x,y,z|q) = sum [n k] W_k P_{n-k}(x,y) z^k.
Rational v_poly(long n, const ParamVector& pv, const Rational& x, const Rational& y,
                const Rational& z, const Rational& q);

/// F_n(x,y,z;q) = (-1)^n q^{-binom(n,2)} sum [n k] (-1)^k q^{binom(k,2)} z^k P_{n-k}(y,x).
Rational trivariate_F(long n, const Rational& x, const Rational& y, const Rational& z,
                      const Rational& q);

/// Generalized Hahn polynomials h_n(x,y,a,b|q) = sum [n k] (a;q)_k b^k P_{n-k}(x,y).
Rational hahn_h(long n, const Rational& x, const Rational& y, const Rational& a,
                const Rational& b, const Rational& q);

/// Homogeneous (second) Hahn polynomials
///   phi_n^{(a)}(x,y|q) = sum [n k] (a;q)_k x^k y^{n-k},
///   psi_n^{(a)}(x,y|q) = sum [n k] q^{k(k-n)} (a q^{1-k};q)_k x^k y^{n-k}.
Rational hahn2_phi(long n, const Rational& a, const Rational& x, const Rational& y,
                   const Rational& q);
Rational hahn2_psi(long n, const Rational& a, const Rational& x, const Rational& y,
                   const Rational& q);

/// Row [n 0], [n 1], ..., [n n] of q-binomial coefficients.
std::vector<Rational> qbinom_row(long n, const Rational& q);

}  // namespace qhyper
