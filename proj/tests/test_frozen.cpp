// Values produced by tests/oracle/oracle.py from the defining sums.
#include <gtest/gtest.h>

#include "qhyper/cauchy_poly.hpp"
#include "qhyper/families.hpp"
#include "qhyper/products.hpp"
#include "qhyper/qpoch.hpp"
#include "test_util.hpp"

using namespace qhyper;
using qtest::pv;
using qtest::R;

namespace {

PointFunction P4yx(const Rational& q) {
  return [q](const Rational& x, const Rational& y) { return cauchy_P(4, y, x, q); };
}

}  // namespace

TEST(Frozen, OracleValues) {
  int count = 0;
#define FROZEN(expr, expected)                           \
  do {                                                   \
    EXPECT_EQ((expr).to_string(), expected) << #expr;    \
    ++count;                                             \
  } while (0);
#include "oracle/frozen_values.inc"
#undef FROZEN
  EXPECT_GT(count, 50);
}
