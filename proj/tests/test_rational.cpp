#include <gtest/gtest.h>

#include "qhyper/error.hpp"
#include "qhyper/rational.hpp"
#include "test_util.hpp"

using qhyper::Rational;
using qtest::R;

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(R("7").to_string(), "7");
  EXPECT_EQ(R("-6/4").to_string(), "-3/2");
  EXPECT_EQ(R("-0.125").to_string(), "-1/8");
  EXPECT_EQ(R("2/-4").to_string(), "-1/2");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(R("1/0"), qhyper::Error);
  EXPECT_THROW(R("abc"), qhyper::Error);
  EXPECT_THROW(R(""), qhyper::Error);
}

TEST(Rational, ArithmeticIsCanonical) {
  const Rational a = R("1/6") + R("1/3");
  EXPECT_EQ(a, R("1/2"));
  EXPECT_EQ(a.denominator_string(), "2");
  EXPECT_EQ((R("2/3") * R("9/4")).to_string(), "3/2");
  EXPECT_EQ((R("2/3") / R("-4")).to_string(), "-1/6");
  EXPECT_EQ(R("-3/4").abs(), R("3/4"));
  EXPECT_EQ(R("2/3").pow(-2), R("9/4"));
  EXPECT_EQ(R("5").pow(0), Rational(1));
}

TEST(Rational, DivisionByZeroIsADomainError) {
  EXPECT_THROW(R("1") / Rational(0), qhyper::DomainError);
  EXPECT_THROW(Rational(0).pow(-1), qhyper::DomainError);
}

TEST(Rational, OrderingAndPredicates) {
  EXPECT_LT(R("-1/2"), R("1/3"));
  EXPECT_GT(R("2/3"), R("3/5"));
  EXPECT_TRUE(Rational(0).is_zero());
  EXPECT_EQ(R("-2/7").sign(), -1);
}

TEST(Rational, DecimalExpansionTruncates) {
  EXPECT_EQ(R("5/12").to_decimal(5), "0.41666");
  EXPECT_EQ(R("-1/8").to_decimal(4), "-0.1250");
  EXPECT_EQ(R("4").to_decimal(2), "4.00");
}

TEST(Rational, DyadicUpperBoundIsAnUpperBound) {
  for (const char* s : {"1/3", "-22/7", "1000001/999", "3/1024"}) {
    const Rational x = R(s);
    const Rational b = x.dyadic_upper_bound(8);
    EXPECT_GE(b, x.abs()) << s;
    EXPECT_LE(b - x.abs(), x.abs() * Rational::pow2(-6)) << s;
  }
  EXPECT_EQ(Rational(0).dyadic_upper_bound(), Rational(0));
  EXPECT_EQ(R("3/1024").dyadic_upper_bound(), R("3/1024"));
}

TEST(Rational, FloorLog2) {
  EXPECT_EQ(R("8").floor_log2_abs(), 3);
  EXPECT_EQ(R("-9").floor_log2_abs(), 3);
  EXPECT_EQ(R("1/8").floor_log2_abs(), -3);
  EXPECT_EQ(R("3/16").floor_log2_abs(), -3);
}

TEST(Rational, BitLimitRaisesMagnitudeError) {
  const auto saved = Rational::bit_limit();
  Rational::set_bit_limit(64);
  EXPECT_THROW(Rational::pow2(100) * R("3"), qhyper::MagnitudeError);
  Rational::set_bit_limit(saved);
  EXPECT_NO_THROW(Rational::pow2(100) * R("3"));
}

TEST(Rational, RoundToGrid) {
  EXPECT_EQ(R("1/3").round_to_grid(2), R("1/4"));
  EXPECT_EQ(R("3/8").round_to_grid(2), R("1/2"));
  EXPECT_EQ(R("-3/8").round_to_grid(2), R("-1/4"));
  EXPECT_EQ(R("5").round_to_grid(-2), R("4"));
  const Rational x = R("-22/7");
  EXPECT_LE((x.round_to_grid(30) - x).abs(), Rational::pow2(-31));
}
