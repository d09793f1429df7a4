#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace isle {

// All randomness in the library flows through one seeded engine type.
using Rng = std::mt19937_64;

// Uniform integer in [0, n). Hand-rolled rejection sampling instead of
// std::uniform_int_distribution, whose output sequence differs between
// standard library implementations; frozen test traces must replay anywhere.
inline std::uint64_t next_below(Rng& rng, std::uint64_t n) {
  assert(n > 0);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Uniform integer in [lo, hi] inclusive.
inline std::int64_t next_in(Rng& rng, std::int64_t lo, std::int64_t hi) {
  assert(lo <= hi);
  return lo + static_cast<std::int64_t>(
                  next_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

// Uniform double in [0, 1) with 53 random mantissa bits.
inline double next_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates shuffle driven by next_below, for the same portability reason.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(next_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace isle
