#ifndef BIBAZ_RNG_HPP
#define BIBAZ_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace bibaz {

// SplitMix64 finalizer; used to derive independent per-task seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index));
}

// mt19937_64 with distributions written out so that streams are identical
// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Standard exponential.
  double exponential() { return -std::log1p(-uniform()); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace bibaz

#endif
