#pragma once

#include <cstdint>
#include <random>

namespace gapcert {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2024'0abcULL;

/// Uniform double in [0,1) built from the top 53 bits of the engine output.
/// Unlike std::uniform_real_distribution, the sequence is fixed by the seed
/// alone, independent of the standard-library implementation.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace gapcert
