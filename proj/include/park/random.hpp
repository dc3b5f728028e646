#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>

namespace park {

using Rng = std::mt19937_64;

/// Uniform draw from [0, n). Implemented directly so that streams are
/// reproducible across standard libraries (std::uniform_int_distribution
/// is not portable bit-for-bit).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n);
  for (;;) {
    std::uint64_t v = rng();
    if (v < limit) return v % n;
  }
}

/// splitmix64 step; used to derive independent sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_string(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace park
