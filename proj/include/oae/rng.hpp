#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace oae {

// splitmix64 finalizer; used to derive independent sub-seeds (per ear, per
// epoch) from one master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seeded random source. The distribution transforms are spelled out here
// because <random> leaves distribution sequences implementation-defined and
// identical seeds must reproduce identical datasets on any toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(gen_() % static_cast<std::uint64_t>(n));
  }

  // Standard normal, Box-Muller cosine branch.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(k_two_pi * u2);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Lognormal parameterized by the target arithmetic mean and SD.
  double lognormal_mean_sd(double mean, double sd) {
    const double cv2 = (sd / mean) * (sd / mean);
    const double s2 = std::log1p(cv2);
    const double mu = std::log(mean) - 0.5 * s2;
    return std::exp(mu + std::sqrt(s2) * normal());
  }

  // Zero-mean Laplace with scale b (variance 2 b^2).
  double laplace(double b) {
    const double u = uniform() - 0.5;
    return -b * std::copysign(std::log1p(-2.0 * std::abs(u)), u);
  }

 private:
  static constexpr double k_two_pi = 6.283185307179586476925286766559;
  std::mt19937_64 gen_;
};

}  // namespace oae
