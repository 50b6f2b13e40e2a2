#include "csounmix/rng.hpp"

#include <cmath>

namespace csounmix {

namespace {
constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t master_seed, uint64_t index) {
  uint64_t s = master_seed;
  uint64_t a = splitmix64(s);
  s = a ^ (index + kGolden);
  uint64_t b = splitmix64(s);
  return b;
}

Rng::Rng(uint64_t seed) {
  uint64_t s = seed;
  for (auto& w : s_) w = splitmix64(s);
}

uint64_t Rng::next_u64() {
  const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

uint64_t Rng::uniform_index(uint64_t n) {
  // Rejection-free modulo bias is negligible for n << 2^64, but stay exact.
  const uint64_t threshold = (0 - n) % n;
  for (;;) {
    uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

double Rng::gaussian() {
  if (spare_) {
    double v = *spare_;
    spare_.reset();
    return v;
  }
  // Basic Box-Muller; u1 in (0,1] avoids log(0).
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  return r * std::cos(a);
}

double Rng::gaussian(double mean, double stddev) {
  return mean + stddev * gaussian();
}

}  // namespace csounmix
