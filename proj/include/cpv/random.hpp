#pragma once

#include "cpv/scalar.hpp"

#include <cstdint>
#include <random>

namespace cpv {

/// Seeded generator with platform-independent integer sampling, so a seed
/// reproduces the same barcodes everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % span);
  }

  bool chance(std::int64_t num, std::int64_t den) { return uniform(0, den - 1) < num; }

  /// Rational k / den with k uniform in [lo * den, hi * den].
  Scalar rational(std::int64_t lo, std::int64_t hi, std::int64_t den) {
    return Scalar(uniform(lo * den, hi * den), den);
  }

 private:
  std::mt19937_64 engine_;
};

/// Derive an independent stream seed (splitmix64 step).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace cpv
