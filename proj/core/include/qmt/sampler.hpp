#pragma once

#include <cstdint>
#include <random>

#include "qmt/quantale.hpp"

namespace qmt {

/// Deterministic value stream for a quantale: boundary elements first
/// (0, top, the first few SAFA witnesses), then seeded pseudo-random draws.
/// Identical (quantale, seed) gives an identical stream.
class Sampler {
 public:
  Sampler(const Quantale& q, std::uint64_t seed);

  Value next();

  /// A random step function with breakpoints on the 1/8 grid and values on
  /// the 1/16 grid, so that coarse-grid oracles evaluate it exactly.
  static Ddf random_rational_ddf(std::mt19937_64& rng, int max_breaks = 4);

 private:
  Value random_value();

  const Quantale& q_;
  std::mt19937_64 rng_;
  std::size_t count_ = 0;
};

}  // namespace qmt
