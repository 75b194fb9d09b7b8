#pragma once

// Deterministic pseudo-random generator used for every randomized component
// (projection matrices, exploration, environment noise). The algorithm is
// pinned so that a seed reproduces the same stream on any platform:
//
//   state seeding   SplitMix64 (Steele, Lea, Flood 2014)
//   stream          xoshiro256** (Blackman, Vigna 2018)
//   uniform double  top 53 bits of the 64-bit output, value in [0, 1)
//   integers        rejection sampling from the 64-bit output
//   normals         Box-Muller on two uniform draws, pair cached
//
// Normal deviates involve libm (log/cos/sin), so they are bit-identical per
// platform and reproducible across platforms up to libm rounding.

#include <cmath>
#include <cstdint>
#include <numbers>

namespace mfecsa {

namespace detail {
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
}  // namespace detail

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = detail::splitmix64_next(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl64(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). Requires n >= 1. Rejection from the top of
  // the 64-bit range keeps the result unbiased.
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  // Standard normal deviate. Box-Muller produces two values per transform;
  // the second is cached for the next call.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 =
        static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  // Derives an independent sub-seed from a base seed and a stream tag.
  // Used to give the projection, agent, and environment of one run their
  // own decorrelated generators.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t state = seed ^ (stream * 0x9E3779B97F4A7C15ULL);
    return detail::splitmix64_next(state);
  }

 private:
  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace mfecsa
