#include "qhyper/summation.hpp"

#include <algorithm>

#include "qhyper/error.hpp"

namespace qhyper {

namespace {

const Rational kRhoCap(9, 10);

Rational tail_from(const Rational& m_prev2, const Rational& m_prev, const Rational& m_last) {
  Rational rho = 0;
  if (!m_prev.is_zero()) rho = m_last / m_prev;
  if (!m_prev2.is_zero() && m_prev / m_prev2 > rho) rho = m_prev / m_prev2;
  if (rho > kRhoCap) rho = kRhoCap;
  return m_last * rho / (Rational(1) - rho);
}

// Shared driver: `step(k)` adds term k to the running sum and returns its
// magnitude.
template <class Step>
std::pair<Rational, long> drive(Step&& step, const SumControl& ctl) {
  Rational m2 = 0, m1 = 0;
  for (long k = 0; k < ctl.max_terms; ++k) {
    const Rational m = step(k);
    if (k >= ctl.k_min + 1 && m1 < ctl.eps && m < ctl.eps) {
      return {tail_from(m2, m1, m), k + 1};
    }
    m2 = m1;
    m1 = m;
  }
  throw ConvergenceError("no two consecutive terms below eps within " + std::to_string(ctl.max_terms) +
                         " terms");
}

}  // namespace

Rational max_norm(const RSeries& s) {
  Rational m = 0;
  for (const auto& c : s.coeffs()) {
    const Rational a = c.abs();
    if (a > m) m = a;
  }
  return m;
}

NumericSum sum_series(const std::function<Rational(long)>& term, const SumControl& ctl) {
  NumericSum out{Rational(0), Rational(0), 0};
  auto [tail, n] = drive(
      [&](long k) {
        const Rational t = term(k);
        out.value += t.round_to_grid(ctl.grid_bits);
        return t.abs();
      },
      ctl);
  out.tail_bound = tail + Rational(n) * Rational::pow2(-ctl.grid_bits - 1);
  out.terms = n;
  return out;
}

NumericSeriesSum sum_series(const std::function<RSeries(long)>& term, int order,
                            const SumControl& ctl) {
  NumericSeriesSum out{RSeries(order), Rational(0), 0};
  auto [tail, n] = drive(
      [&](long k) {
        const RSeries t = term(k);
        for (int i = 0; i <= std::min(order, t.order()); ++i) out.value[i] += t[i].round_to_grid(ctl.grid_bits);
        return max_norm(t);
      },
      ctl);
  out.tail_bound = tail + Rational(n) * Rational::pow2(-ctl.grid_bits - 1);
  out.terms = n;
  return out;
}

}  // namespace qhyper
