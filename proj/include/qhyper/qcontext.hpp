#pragma once

#include "qhyper/rational.hpp"

namespace qhyper {

enum class Mode { Formal, Numeric };

const char* to_string(Mode m);

/// The base q together with the truncation policy shared by a computation.
class QContext {
 public:
  /// Throws ArgumentError if q = 0, if q^k = 1 for some 1 <= k <= 2*order,
  /// or (Numeric) if |q| >= 1.
  QContext(Rational q, Mode mode, int order = 12, Rational epsilon = Rational::pow2(-80));

  const Rational& q() const { return q_; }
  Mode mode() const { return mode_; }
  int order() const { return order_; }
  const Rational& epsilon() const { return epsilon_; }

 private:
  Rational q_;
  Mode mode_;
  int order_;
  Rational epsilon_;
};

}  // namespace qhyper
