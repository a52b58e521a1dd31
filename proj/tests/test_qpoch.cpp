#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "qhyper/error.hpp"
#include "qhyper/qcontext.hpp"
#include "qhyper/qpoch.hpp"
#include "test_util.hpp"

using namespace qhyper;
using qtest::R;

TEST(QPoch, SmallValues) {
  EXPECT_EQ(qpoch(R("7/3"), R("1/5"), 0), Rational(1));
  EXPECT_EQ(qpoch(R("2"), R("1/2"), 2), Rational(0));
  EXPECT_EQ(qpoch(R("1/2"), R("1/2"), 2), R("3/8"));
}

TEST(QPoch, MultiIsTheProduct) {
  EXPECT_EQ(qpoch_multi({}, R("1/3"), 5), Rational(1));
  const std::vector<Rational> as{R("2"), R("1/2")};
  EXPECT_EQ(qpoch_multi(as, R("1/2"), 2), Rational(0));
  const std::vector<Rational> one{R("-3/7")};
  EXPECT_EQ(qpoch_multi(one, R("2/5"), 4), qpoch(R("-3/7"), R("2/5"), 4));
}

TEST(QPoch, SplitsAtAnyIndex) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-9, 9), den(2, 9), len(0, 7);
  for (int i = 0; i < 50; ++i) {
    const Rational a(num(rng), den(rng));
    Rational q(num(rng), den(rng));
    if (q.is_zero()) q = R("1/3");
    const long n = len(rng), m = len(rng);
    EXPECT_EQ(qpoch(a, q, n + m), qpoch(a, q, n) * qpoch(a * q.pow(n), q, m));
  }
}

TEST(QBinom, SmallValuesAndBounds) {
  EXPECT_EQ(qbinom(2, 1, R("1/2")), R("3/2"));
  EXPECT_EQ(qbinom(6, 0, R("2/7")), Rational(1));
  EXPECT_EQ(qbinom(3, 4, R("1/2")), Rational(0));
  EXPECT_EQ(qbinom(3, -1, R("1/2")), Rational(0));
  const Rational q = R("1/2");
  EXPECT_EQ(qbinom(4, 2, q), qfactorial(q, 4) / (qfactorial(q, 2) * qfactorial(q, 2)));
}

TEST(QBinom, SymmetryAndPascal) {
  for (const char* qs : {"1/2", "-2/3", "5/7", "3"}) {
    const Rational q = R(qs);
    for (long n = 1; n <= 20; ++n) {
      for (long k = 0; k <= n; ++k) {
        EXPECT_EQ(qbinom(n, k, q), qbinom(n, n - k, q));
        EXPECT_EQ(qbinom(n, k, q), qbinom(n - 1, k - 1, q) + q.pow(k) * qbinom(n - 1, k, q));
      }
    }
  }
}

TEST(QBinom, RootOfUnityIsADomainError) { EXPECT_THROW(qbinom(3, 1, R("-1")), DomainError); }

TEST(QPochShift, Examples) {
  EXPECT_EQ(qpoch_shift(R("5/3"), R("1/4"), 0), std::make_pair(Rational(1), Rational(1)));
  const auto [l, r] = qpoch_shift(R("2"), R("1/2"), 1);
  EXPECT_EQ(l, R("-3"));
  EXPECT_EQ(r, R("-3"));
  const auto [l2, r2] = qpoch_shift(R("3"), R("1/3"), 2);
  EXPECT_EQ(l2, r2);
  EXPECT_EQ(l2, (Rational(1) - R("3") * R("9")) * (Rational(1) - R("3") * R("3")));
  EXPECT_THROW(qpoch_shift(Rational(0), R("1/2"), 2), DomainError);
}

TEST(QPochInf, ZeroArgumentIsOne) {
  const auto p = qpoch_inf(Rational(0), R("1/2"), Rational::pow2(-40));
  EXPECT_EQ(p.value, Rational(1));
}

TEST(QPochInf, FactorCountAndStability) {
  const Rational eps = Rational::pow2(-40);
  const auto p = qpoch_inf(R("1/2"), R("1/2"), eps);
  EXPECT_EQ(p.factors, 40);
  const auto fine = qpoch_inf(R("1/2"), R("1/2"), Rational::pow2(-80));
  EXPECT_LT((p.value - fine.value).abs(), Rational::pow2(-38));
  EXPECT_LE((p.value - fine.value).abs(), p.error_bound);
}

TEST(QPochInf, TelescopesToTheFiniteSymbol) {
  const Rational q = R("-2/5");
  const Rational a = R("3/7");
  const Rational eps = Rational::pow2(-100);
  for (long n = 0; n <= 6; ++n) {
    const Rational ratio = qpoch_inf(a, q, eps).value / qpoch_inf(a * q.pow(n), q, eps).value;
    EXPECT_LT((ratio - qpoch(a, q, n)).abs(), Rational::pow2(-90));
  }
}

TEST(QPochInf, RequiresConvergentBase) { EXPECT_THROW(qpoch_inf(R("1/2"), R("3/2"), Rational::pow2(-10)), ArgumentError); }

TEST(BracketPower, Values) {
  const Rational q = R("1/3");
  EXPECT_EQ(bracket_power(0, 5, q), Rational(1));
  EXPECT_EQ(bracket_power(3, 1, q), -q.pow(3));
  EXPECT_EQ(bracket_power(3, -1, q), -q.pow(-3));
  EXPECT_EQ(bracket_power(4, 2, q), q.pow(12));
  EXPECT_EQ(bracket_power(5, 0, q), Rational(1));
}

TEST(QContext, Guards) {
  EXPECT_THROW(QContext(Rational(0), Mode::Formal), ArgumentError);
  EXPECT_THROW(QContext(R("-1"), Mode::Formal), ArgumentError);
  EXPECT_THROW(QContext(R("3/2"), Mode::Numeric), ArgumentError);
  EXPECT_NO_THROW(QContext(R("3/2"), Mode::Formal));
  const QContext ctx(R("1/3"), Mode::Numeric, 8);
  EXPECT_EQ(ctx.order(), 8);
  EXPECT_EQ(ctx.epsilon(), Rational::pow2(-80));
}
