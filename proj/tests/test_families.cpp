#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "qhyper/error.hpp"
#include "qhyper/families.hpp"
#include "qhyper/qpoch.hpp"
#include "test_util.hpp"

using namespace qhyper;
using qtest::pv;
using qtest::R;

TEST(CauchyP, Examples) {
  const Rational q = R("1/3");
  EXPECT_EQ(cauchy_P(0, R("4"), R("9"), q), Rational(1));
  EXPECT_EQ(cauchy_P(2, R("1"), R("1/2"), q), R("5/12"));
  EXPECT_EQ(cauchy_P(2, R("2"), R("5"), q), (R("2") - R("5")) * (R("2") - q * R("5")));
}

TEST(CauchyP, ProductFormMatchesPochhammerForm) {
  const Rational q = R("-2/5");
  for (const char* xs : {"3/4", "-7", "1/9"}) {
    for (const char* ys : {"0", "2/3", "-5/2"}) {
      const Rational x = R(xs), y = R(ys);
      for (long n = 0; n <= 10; ++n) EXPECT_EQ(cauchy_P(n, x, y, q), qpoch(y / x, q, n) * x.pow(n));
    }
  }
}

TEST(WCoeff, Examples) {
  const Rational q = R("1/2");
  EXPECT_EQ(W_coeff(0, pv({"3"}, {"5"}), q), Rational(1));
  ParamVector term;
  term.upper = {q.pow(-3)};
  EXPECT_EQ(W_coeff(4, term, q), Rational(0));
  EXPECT_EQ(W_coeff(6, pv({"2/7"}, {"2/7"}), q), Rational(1));
  EXPECT_THROW(W_coeff(2, pv({}, {"2"}), q), DomainError);
}

TEST(Psi, LowDegrees) {
  const Rational q = R("1/2");
  EXPECT_EQ(psi_general(0, pv({"1/3"}, {}), R("2"), R("5"), R("7"), q), Rational(1));
  EXPECT_EQ(psi_general(1, pv({}, {}), R("2"), R("1"), R("3"), q), R("4"));
  const Rational x = R("-4/9"), y = R("3/7"), z = R("5/2");
  EXPECT_EQ(psi_general(1, pv({}, {}), x, y, z, q), x - y + z);
  EXPECT_EQ(psi_general(FamilyPoint{x, y, z, 1}, pv({}, {}), q), x - y + z);
}

TEST(Psi, EmptyParametersGiveTheTrivariateFamily) {
  const Rational q = R("2/3"), x = R("1/5"), y = R("-3/4"), z = R("7/3");
  for (long n = 0; n <= 8; ++n) EXPECT_EQ(psi_general(n, pv({}, {}), x, y, z, q), trivariate_F(n, x, y, z, q));
}

TEST(Psi, DegreeInZIsExactlyN) {
  // The (n+1)-th finite difference in z vanishes and the n-th does not.
  const Rational q = R("1/3"), x = R("2/5"), y = R("-1/7");
  const ParamVector p = pv({"1/4", "-3/2"}, {"5/6"});
  for (long n = 0; n <= 6; ++n) {
    std::vector<Rational> vals;
    for (long j = 0; j <= n + 1; ++j) vals.push_back(psi_general(n, p, x, y, Rational(j), q));
    std::vector<std::vector<Rational>> diffs{vals};
    while (diffs.back().size() > 1) {
      const auto& d = diffs.back();
      std::vector<Rational> next;
      for (std::size_t i = 0; i + 1 < d.size(); ++i) next.push_back(d[i + 1] - d[i]);
      diffs.push_back(next);
    }
    EXPECT_TRUE(diffs[static_cast<std::size_t>(n) + 1][0].is_zero());
    EXPECT_FALSE(diffs[static_cast<std::size_t>(n)][0].is_zero());
  }
}

TEST(AlSalamCarlitz, LowDegrees) {
  const Rational q = R("1/2"), a = R("3/5"), x = R("-2/3");
  EXPECT_EQ(asc_phi(0, a, x, q), Rational(1));
  EXPECT_EQ(asc_psi(0, a, x, q), Rational(1));
  EXPECT_EQ(asc_phi(1, a, x, q), Rational(1) + (Rational(1) - a) * x);
  EXPECT_EQ(asc_psi(1, a, x, q), Rational(1) + (Rational(1) - a) * x);
}

TEST(Cao, ReducesToAlSalamCarlitzPhi) {
  const Rational q = R("-3/7"), a = R("5/4"), x = R("2/9");
  for (long n = 0; n <= 8; ++n) {
    EXPECT_EQ(cao_phi3(n, a, Rational(0), Rational(0), x, Rational(1), q), asc_phi(n, a, x, q));
  }
}

TEST(Cao, PsiReductionNeedsTheScaledArgument) {
  // (a,b,c,y) = (1/a,0,0,1) alone does not give psi_n^{(a)}(x); the
  // argument must also be scaled to a x.
  const Rational q = R("1/3"), a = R("2/5"), x = R("-3/4");
  bool differs = false;
  for (long n = 1; n <= 8; ++n) {
    const Rational printed = cao_psi3(n, a.inverse(), Rational(0), Rational(0), x, Rational(1), q);
    differs = differs || printed != asc_psi(n, a, x, q);
    EXPECT_EQ(cao_psi3(n, a.inverse(), Rational(0), Rational(0), a * x, Rational(1), q), asc_psi(n, a, x, q));
  }
  EXPECT_TRUE(differs);
}

TEST(Extensions, DegenerateToCao) {
  const Rational q = R("2/7"), a = R("1/3"), b = R("-4/5"), c = R("3/8"), x = R("5/3"), y = R("-1/2");
  for (long n = 0; n <= 6; ++n) {
    EXPECT_EQ(ext_phi5(n, a, b, Rational(0), c, Rational(0), y, x, q), cao_phi3(n, a, b, c, x, y, q));
  }
  EXPECT_EQ(ext_phi5(0, a, b, c, R("2"), R("3"), x, y, q), Rational(1));
  EXPECT_EQ(ext_psi5(0, a, b, c, R("2"), R("3"), x, y, q), Rational(1));
}

TEST(Extensions, ReversedSummationAgrees) {
  const Rational q = R("3/5"), a = R("1/4"), b = R("2/3"), c = R("-3"), d = R("5/7"), e = R("-1/6");
  const Rational x = R("4/3"), y = R("-2/5");
  const long n = 5;
  Rational rev = 0;
  for (long k = n; k >= 0; --k) {
    rev += qbinom(n, k, q) * qpoch(a, q, k) * qpoch(b, q, k) * qpoch(c, q, k) / (qpoch(d, q, k) * qpoch(e, q, k)) *
           x.pow(n - k) * y.pow(k);
  }
  EXPECT_EQ(ext_phi5(n, a, b, c, d, e, x, y, q), rev);
}

TEST(SrivastavaAgarwal, SingleParameterMatchesCao) {
  const Rational q = R("-1/4"), a = R("7/3"), x = R("1/2"), y = R("3");
  for (long n = 0; n <= 6; ++n) {
    EXPECT_EQ(sa_phi(n, ParamVector{{a}, {}}, x, y, q), cao_phi3(n, a, Rational(0), Rational(0), x, y, q));
  }
  EXPECT_THROW(sa_phi(2, pv({"1/2"}, {"1/3"}), x, y, q), ArgumentError);
}

TEST(VPoly, Specializations) {
  const Rational q = R("1/5"), x = R("2/3"), y = R("-5/4");
  const ParamVector p = pv({"1/2", "3"}, {"-2/7"});
  EXPECT_EQ(v_poly(0, p, x, y, R("9"), q), Rational(1));
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(v_poly(n, p, x, y, Rational(0), q), cauchy_P(n, x, y, q));
}

TEST(QBinomRow, MatchesQBinom) {
  const Rational q = R("4/9");
  const auto row = qbinom_row(7, q);
  ASSERT_EQ(row.size(), 8u);
  for (long k = 0; k <= 7; ++k) EXPECT_EQ(row[static_cast<std::size_t>(k)], qbinom(7, k, q));
}
