#include "qhyper/verify/sampler.hpp"

namespace qhyper::verify {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view suite, std::string_view identity,
                          std::uint64_t trial) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto feed = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001B3ULL;
    }
  };
  feed(suite);
  feed("/");
  feed(identity);
  return splitmix64(splitmix64(h ^ splitmix64(master)) + trial);
}

long Sampler::uniform_int(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % span);
  std::uint64_t v;
  do {
    v = rng_();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

}  // namespace qhyper::verify
