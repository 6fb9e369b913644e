#pragma once

#include <cstdint>
#include <random>

#include "vnet/algebra.hpp"

namespace vnet {

/// Uniform double in [0,1) from the top 53 bits of the engine output.
/// Unlike std::uniform_real_distribution this mapping is identical on
/// every standard library, so seeded runs reproduce across toolchains.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Uniform sample from the closed unit ball of R^n (rejection from the cube).
template <typename Scalar = double>
VectorX<Scalar> sample_unit_ball(std::mt19937_64& rng, Eigen::Index n) {
  VectorX<Scalar> x(n);
  for (;;) {
    double sq = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double v = uniform_in(rng, -1.0, 1.0);
      x(i) = static_cast<Scalar>(v);
      sq += v * v;
    }
    if (sq <= 1.0) return x;
  }
}

}  // namespace vnet
