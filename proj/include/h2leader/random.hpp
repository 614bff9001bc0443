#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace h2leader {

// Thin wrappers over mt19937_64 raw draws. The standard distributions are
// implementation-defined, so sampling goes through these fixed mappings to
// keep seeded runs reproducible across toolchains.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

/// Uniform integer in [lo, hi], inclusive. Rejection sampling, no modulo bias.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo,
                                std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = (UINT64_MAX / span) * span;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return lo + static_cast<std::int64_t>(draw % span);
}

/// Log-uniform double in [lo, hi], lo > 0.
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform_real(rng, std::log(lo), std::log(hi)));
}

}  // namespace h2leader
