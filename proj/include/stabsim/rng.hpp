#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace stabsim {

/// splitmix64 finalizer; full-avalanche 64-bit mixing.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

/// Splittable child-seed derivation. Distinct (draw, branch) index pairs
/// yield statistically independent streams for any master seed, so results
/// do not depend on worker count or scheduling order.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t draw_index,
                                    std::uint64_t branch_or_sample_index) {
  std::uint64_t z = mix64(master_seed ^ (0x9e3779b97f4a7c15ULL + draw_index * 0xd1342543de82ef95ULL));
  return mix64(z ^ (0x8cb92ba72f3d8dd7ULL + branch_or_sample_index * 0xda942042e4dd58b5ULL));
}

/// mt19937_64 with hand-rolled uniform helpers. std:: distributions are
/// implementation-defined, these are stable for a given build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Unbiased uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  bool coin() { return (gen_() >> 63) != 0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace stabsim
