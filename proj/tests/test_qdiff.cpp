#include <gtest/gtest.h>

#include "qhyper/cauchy_poly.hpp"
#include "qhyper/error.hpp"
#include "qhyper/families.hpp"
#include "qhyper/hyper.hpp"
#include "qhyper/products.hpp"
#include "qhyper/qpoch.hpp"
#include "test_util.hpp"

using namespace qhyper;
using qtest::pv;
using qtest::R;

namespace {

PointFunction basis_eval(long n, const Rational& q) {
  return [n, q](const Rational& x, const Rational& y) { return cauchy_P(n, y, x, q); };
}

}  // namespace

TEST(CauchyPoly, ArithmeticDropsZeros) {
  const CauchyPoly a = CauchyPoly::basis(2, R("3/4")) + CauchyPoly::basis(0, 1);
  const CauchyPoly b = CauchyPoly::basis(2, R("3/4"));
  EXPECT_EQ((a - b), CauchyPoly::basis(0, 1));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.degree(), 2);
  EXPECT_EQ((a * R("2")).coeff(2), R("3/2"));
}

TEST(CauchyPoly, EvaluatesInTheSwappedBasis) {
  const Rational q = R("1/3");
  const CauchyPoly f = CauchyPoly::basis(3, R("2")) + CauchyPoly::basis(1, R("-1"));
  const Rational x0 = R("5/2"), y0 = R("-1/3");
  EXPECT_EQ(f.evaluate(x0, y0, q), R("2") * cauchy_P(3, y0, x0, q) - cauchy_P(1, y0, x0, q));
}

TEST(ThetaBasis, Examples) {
  const Rational q = R("2/5");
  const CauchyPoly p2 = CauchyPoly::basis(2);
  EXPECT_EQ(theta_basis(p2, 0, q), p2);
  EXPECT_EQ(theta_basis(p2, 1, q), CauchyPoly::basis(1, -(Rational(1) - q * q)));
  EXPECT_TRUE(theta_basis(CauchyPoly::basis(1), 2, q).is_zero());
}

TEST(ThetaPointwise, Examples) {
  const Rational q = R("1/2");
  EXPECT_EQ(theta_pointwise([](const Rational&, const Rational&) { return R("7"); }, R("3"), R("1"), q), Rational(0));
  const Rational x0 = R("1/3"), y0 = R("2");
  EXPECT_EQ(theta_pointwise(basis_eval(2, q), x0, y0, q), theta_basis(CauchyPoly::basis(2), 1, q).evaluate(x0, y0, q));
  const Rational lin = theta_pointwise([](const Rational& x, const Rational&) { return x; }, x0, y0, q);
  EXPECT_EQ(lin, (x0 / q - x0) / (x0 / q - y0));
  EXPECT_THROW(theta_pointwise(basis_eval(1, q), R("1"), R("2"), q), DomainError);
}

TEST(ThetaBasis, AgreesWithNestedQuotientsOnEveryBasisElement) {
  const Rational q = R("-3/7"), x0 = R("5/4"), y0 = R("2/9");
  for (long n = 0; n <= 8; ++n) {
    for (long k = 0; k <= n; ++k) {
      EXPECT_EQ(theta_basis(CauchyPoly::basis(n), k, q).evaluate(x0, y0, q),
                theta_pointwise_power(basis_eval(n, q), k, x0, y0, q))
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(OpApply, IdentityCases) {
  const Rational q = R("1/3");
  const CauchyPoly p0 = CauchyPoly::basis(0, R("5"));
  EXPECT_EQ(op_apply_poly(pv({"1/2"}, {"3/4"}), R("2"), p0, q), p0);
  const CauchyPoly f = CauchyPoly::basis(4, R("1/2")) + CauchyPoly::basis(1, R("3"));
  EXPECT_EQ(op_apply_poly(pv({}, {}), Rational(0), f, q), f);
}

TEST(OpApply, FirstOperationalFormula) {
  const Rational q = R("2/7"), x0 = R("-3/5"), y0 = R("4/3"), z = R("5/2");
  for (const auto& p : {pv({}, {}), pv({"1/3", "-2"}, {"3/4"}), pv({"5/6"}, {"1/5", "-7/3", "2/9"})}) {
    for (long n = 0; n <= 8; ++n) {
      const CauchyPoly f = CauchyPoly::basis(n, bracket_power(n, -1, q));
      EXPECT_EQ(op_apply_poly(p, z, f, q).evaluate(x0, y0, q), psi_general(n, p, x0, y0, z, q));
    }
  }
}

TEST(OpApply, SeriesCases) {
  const Rational q = R("1/4");
  const ParamVector p = pv({"2/3"}, {"-1/2"});
  const CauchySeries f = shifted_cauchy_series(0, q, 6);
  EXPECT_EQ(op_apply_series(p, Rational(0), f, q), f);
  const CauchySeries f0 = shifted_cauchy_series(0, q, 0);
  EXPECT_EQ(op_apply_series(p, R("3"), f0, q)[0], op_apply_poly(p, R("3"), f0[0], q));
}

TEST(OpApply, GeneratingFunctionOfPsi) {
  // Applying the operator to (xt)_inf/(yt)_inf gives the rPhis-weighted product.
  const Rational q = R("-2/5"), x0 = R("1/3"), y0 = R("-4/7"), z = R("3/2");
  const ParamVector p = pv({"1/2", "-3"}, {"2/5"});
  const int N = 10;
  const RSeries lhs = evaluate(op_apply_series(p, z, shifted_cauchy_series(0, q, N), q), x0, y0, q);
  const RSeries rhs = cauchy_ratio_series(y0, x0, q, N) * rphis_series_in_t(p, q, z, N);
  EXPECT_EQ(lhs, rhs);
}

TEST(ShiftedCauchySeries, LeadingTerms) {
  const Rational q = R("1/2");
  EXPECT_EQ(shifted_cauchy_series(1, q, 3)[0], CauchyPoly::basis(1));
  const CauchySeries s = shifted_cauchy_series(0, q, 3);
  EXPECT_EQ(s[2], CauchyPoly::basis(2, qfactorial(q, 2).inverse()));
}

TEST(ThetaSeries, EigenRelation) {
  const Rational q = R("3/5");
  const int N = 8;
  const CauchySeries s = shifted_cauchy_series(0, q, N);
  for (long k = 0; k <= 4; ++k) {
    const CauchySeries lhs = theta_series(s, k, q);
    CauchySeries rhs(N);
    for (int n = 0; n + k <= N; ++n) rhs[n + static_cast<int>(k)] = s[n] * ((k % 2 == 0) ? Rational(1) : Rational(-1));
    EXPECT_EQ(lhs, rhs) << "k=" << k;
  }
}
