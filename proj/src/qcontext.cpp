#include "qhyper/qcontext.hpp"

#include "qhyper/error.hpp"

namespace qhyper {

const char* to_string(Mode m) { return m == Mode::Formal ? "formal" : "numeric"; }

QContext::QContext(Rational q, Mode mode, int order, Rational epsilon)
    : q_(std::move(q)), mode_(mode), order_(order), epsilon_(std::move(epsilon)) {
  if (q_.is_zero()) throw ArgumentError("q must be nonzero");
  if (order_ < 0) throw ArgumentError("order must be nonnegative");
  if (epsilon_.sign() <= 0) throw ArgumentError("epsilon must be positive");
  if (mode_ == Mode::Numeric && q_.abs() >= Rational(1)) {
    throw ArgumentError("numeric mode requires |q| < 1, got q = " + q_.to_string());
  }
  // The only rational roots of unity are 1 and -1, but the loop keeps the
  // guard literal and cheap.
  Rational p = 1;
  for (int k = 1; k <= 2 * order_; ++k) {
    p *= q_;
    if (p == Rational(1)) {
      throw ArgumentError("q^" + std::to_string(k) + " = 1 would make (q;q)_k vanish");
    }
    if (p.abs() != Rational(1)) break;
  }
}

}  // namespace qhyper
