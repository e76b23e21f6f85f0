#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace radialens {

// Deterministic RNG used everywhere randomness is needed. mt19937_64 has a
// standardized output sequence, and the uniform mapping below avoids
// std::uniform_real_distribution (whose sequence is implementation-defined),
// so a given seed produces the same values on every platform.
class Rng {
public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  // Standard normal via Box-Muller (fixed draw order, no state caching).
  double normal() {
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  // Poisson sample; Knuth's product method for small means, normal
  // approximation above that (adequate for measurement-noise simulation).
  long poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    if (lambda < 30.0) {
      const double limit = std::exp(-lambda);
      double prod = 1.0;
      long k = -1;
      do {
        prod *= uniform01();
        ++k;
      } while (prod > limit);
      return k;
    }
    const double x = lambda + std::sqrt(lambda) * normal();
    return x < 0.0 ? 0 : static_cast<long>(x + 0.5);
  }

  uint64_t next_u64() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

// Mixes a task index into a base seed so parallel workers draw from
// independent streams that do not depend on scheduling order.
inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
  uint64_t z = base + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace radialens
