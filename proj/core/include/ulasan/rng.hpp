#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace ulasan {

// All randomized operations in this project are pure functions of
// (input, seed). The generator is std::mt19937_64 (algorithm fixed by the
// C++ standard) and all draws go through the explicit helpers below instead
// of std::uniform_*_distribution, whose output is implementation-defined.
using Rng = std::mt19937_64;

// SplitMix64 finalizer, used to derive independent stream seeds from a
// master seed plus a tag (e.g. fold index, class code).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t index = 0) {
  std::uint64_t h = mix64(master);
  for (char c : tag) h = mix64(h ^ static_cast<unsigned char>(c));
  return mix64(h ^ index);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform integer in [0, n) by rejection sampling on the raw 64-bit stream.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Uniform double in [0, 1) with 53 random mantissa bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates on top of uniform_index, so shuffles are reproducible across
// standard libraries (std::shuffle is not).
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_index(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace ulasan
