#ifndef COMPSUM_SAMPLING_HPP
#define COMPSUM_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "compsum/rational.hpp"

namespace compsum {

// Default seed for every randomized check; override via --seed / COMPSUM_SEED.
inline constexpr std::uint64_t kDefaultSeed = 20020521;

// Small random rationals for identity testing: numerators in [-9, 9],
// denominators in {1..7}. mt19937_64 keeps the stream identical across
// platforms, so seeded runs are byte-reproducible.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : eng_(seed) {}

  Rational next() {
    const long num = static_cast<long>(eng_() % 19) - 9;
    const long den = static_cast<long>(eng_() % 7) + 1;
    return Rational(num, den);
  }

  // Rejection-samples until pred accepts.
  template <class Pred>
  Rational next_where(Pred&& pred) {
    for (;;) {
      Rational r = next();
      if (pred(r)) return r;
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Decorrelates per-family substreams derived from one user-facing seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed ^ (salt * 0x9E3779B97F4A7C15ull);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

}  // namespace compsum

#endif
