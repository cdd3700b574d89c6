#pragma once

#include <cstdint>
#include <random>

namespace hyperclique {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; derives independent stream seeds from a master seed.
constexpr std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// std::uniform_*_distribution output differs between standard libraries, and
// seeded runs must be reproducible everywhere, so draws are done by hand.

/// Uniform in [0, bound); bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Reject the low 2^64 mod bound outputs so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

/// Uniform in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace hyperclique
