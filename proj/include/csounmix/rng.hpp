#pragma once

#include <cstdint>
#include <optional>

namespace csounmix {

/// splitmix64 mixing step; also used to derive per-sample seeds.
uint64_t splitmix64(uint64_t& state);

/// Stateless hash of (master_seed, index) for per-sample seed derivation.
uint64_t derive_seed(uint64_t master_seed, uint64_t index);

/// xoshiro256++ generator, seeded through splitmix64.
/// Gaussian variates come from Box-Muller so that the byte stream is
/// reproducible across platforms for a given seed.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Integer in [0, n).
  uint64_t uniform_index(uint64_t n);

  /// Standard normal via Box-Muller (both variates consumed in order).
  double gaussian();

  double gaussian(double mean, double stddev);

 private:
  uint64_t s_[4];
  std::optional<double> spare_;
};

}  // namespace csounmix
