#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "qhyper/families.hpp"
#include "qhyper/rational.hpp"

namespace qhyper::verify {

/// Stream seed for one trial: FNV-1a over "suite/identity" mixed with the
/// master seed and trial index through splitmix64.
std::uint64_t derive_seed(std::uint64_t master, std::string_view suite, std::string_view identity,
                          std::uint64_t trial);

std::uint64_t splitmix64(std::uint64_t x);

/// Draws small-height rationals from a 64-bit Mersenne Twister. Bounded
/// integers use rejection sampling so streams are identical on every
/// standard library.
class Sampler {
 public:
  static constexpr long kHeight = 64;

  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform_int(long lo, long hi);

  /// p/d with |p| <= height and 1 <= d <= height.
  Rational rational(long height = kHeight);
  Rational nonzero(long height = kHeight);

  /// radius * p/d with |p/d| <= 15/16, so strict bounds hold with margin.
  Rational within(const Rational& radius, long height = kHeight);
  Rational nonzero_within(const Rational& radius, long height = kHeight);

  /// Base for exact coefficient checks: p/d with 0 < |p| < d <= height.
  Rational q_formal(long height = kHeight);

  /// Base for numeric checks, one of +-1/2, +-1/3, +-1/4, +-1/5, +-2/5.
  Rational q_numeric();

  /// r upper and s lower random parameters.
  ParamVector params(long r, long s, long height = kHeight);

  /// Uniform element of a nonempty list.
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform_int(0, static_cast<long>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qhyper::verify
