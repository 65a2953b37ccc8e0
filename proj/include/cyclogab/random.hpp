#pragma once

// Seeded randomness with a fully specified stream. std::mt19937_64 output is
// fixed by the standard; the distribution helpers below replace the
// implementation-defined std::uniform_int_distribution so runs reproduce
// bit-for-bit on every standard library.

#include <cstdint>
#include <limits>
#include <random>

namespace cyclogab {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection on the raw 64-bit stream.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw > limit);
  return draw % bound;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Sub-seed for the `counter`-th consumer of a top-level seed. Counter 0 is
/// the seed itself, so a single-draw run is reproducible from the seed alone.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) {
  return counter == 0 ? seed : splitmix64(seed ^ splitmix64(counter));
}

}  // namespace cyclogab
