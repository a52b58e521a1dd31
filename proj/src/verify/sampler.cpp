#include "qhyper/verify/sampler.hpp"

namespace qhyper::verify {

Rational Sampler::rational(long height) {
  const long p = uniform_int(-height, height);
  const long d = uniform_int(1, height);
  return Rational(p, d);
}

Rational Sampler::nonzero(long height) {
  Rational v;
  do {
    v = rational(height);
  } while (v.is_zero());
  return v;
}

Rational Sampler::within(const Rational& radius, long height) {
  const long d = uniform_int(1, height);
  const long pmax = (15 * d) / 16;
  return radius * Rational(uniform_int(-pmax, pmax), d);
}

Rational Sampler::nonzero_within(const Rational& radius, long height) {
  Rational v;
  do {
    v = within(radius, height);
  } while (v.is_zero());
  return v;
}

Rational Sampler::q_formal(long height) {
  const long d = uniform_int(2, height);
  long p;
  do {
    p = uniform_int(-(d - 1), d - 1);
  } while (p == 0);
  return Rational(p, d);
}

Rational Sampler::q_numeric() {
  static const std::vector<Rational> kBases = {Rational(1, 2),  Rational(-1, 2), Rational(1, 3),
                                               Rational(-1, 3), Rational(1, 4),  Rational(-1, 4),
                                               Rational(1, 5),  Rational(-1, 5), Rational(2, 5),
                                               Rational(-2, 5)};
  return pick(kBases);
}

ParamVector Sampler::params(long r, long s, long height) {
  ParamVector pv;
  for (long i = 0; i < r; ++i) pv.upper.push_back(rational(height));
  for (long i = 0; i < s; ++i) pv.lower.push_back(rational(height));
  return pv;
}

}  // namespace qhyper::verify
