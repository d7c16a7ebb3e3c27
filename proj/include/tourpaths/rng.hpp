#pragma once

#include <cstdint>
#include <random>

namespace tourpaths {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; platform independent, unlike
/// std::uniform_int_distribution.
inline std::uint64_t uniform_below(Rng& g, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = g();
    if (x >= threshold) return x % bound;
  }
}

/// SplitMix64 finaliser of seed + (index+1) * golden ratio; per-trial seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace tourpaths
