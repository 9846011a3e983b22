#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace qssim {

/// Deterministic PRNG for Monte Carlo runs: a std::mt19937_64 engine with a
/// fixed 53-bit uniform-double construction, so identical seeds give
/// identical streams on every platform.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : eng_(seed) {}

  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Index k with probability weights[k] / Σ weights.
  std::size_t pick(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double r = uniform() * total;
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < weights.size(); ++k) {
      acc += weights[k];
      if (r < acc) return k;
    }
    return weights.size() - 1;
  }

  std::size_t uniform_index(std::size_t n) {
    auto k = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return k < n ? k : n - 1;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qssim
