#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace resona {

// Seeded pseudo-random generator with a fixed, portable algorithm (splitmix64
// state update). Unlike std::mt19937 + std::uniform_real_distribution, every
// draw below is plain integer/float arithmetic, so a given seed produces the
// same stream on every platform and standard library. Fixtures depend on that.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Standard normal via Box-Muller. Two uniforms are consumed per draw; the
  // sine branch is discarded so the stream position stays easy to reason about.
  double gaussian() {
    double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace resona
