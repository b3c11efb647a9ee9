#ifndef SPDG_RNG_HPP
#define SPDG_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

namespace spdg {

// Seeded generator built on mt19937_64 (bit-exact across platforms).
// Uniform and normal draws are derived here directly rather than through
// std::*_distribution, whose output is implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1) with 53-bit resolution.
  double next_uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).
  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_uniform();
  }

  // Uniform index in [0, n).
  std::size_t next_index(std::size_t n) {
    auto i = static_cast<std::size_t>(next_uniform() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  // Standard normal pair via Box-Muller.
  std::pair<double, double> next_normal_pair() {
    double u1 = next_uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

 private:
  std::mt19937_64 engine_;
};

// Stable seed derivation for sub-runs (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace spdg

#endif
