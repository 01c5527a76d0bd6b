#pragma once

#include "nkflag/lie_structure.hpp"

#include <cstdint>
#include <random>

namespace nkflag {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Uniform draws from [-1, 1]^n with a reproducible engine.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  TangentVectord tangent() {
    TangentVectord v;
    for (int i = 0; i < 6; ++i) v(i) = uniform();
    return v;
  }

  AlgebraVectord algebra() {
    AlgebraVectord v;
    for (int i = 0; i < 8; ++i) v(i) = uniform();
    return v;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nkflag
