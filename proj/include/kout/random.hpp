#pragma once

#include <cstdint>
#include <random>

namespace kout {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for trial `index` under `root`. For a fixed root the map
/// index -> seed is injective: root + index * odd is a bijection mod 2^64
/// and mix64 is a bijection.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) noexcept {
  return mix64(root + index * 0xd1b54a32d192ed03ULL);
}

/// Uniform integer in [0, bound). bound must be positive.
template <typename Int>
Int uniform_below(Rng& rng, Int bound) {
  std::uniform_int_distribution<Int> dist(0, bound - 1);
  return dist(rng);
}

inline bool bernoulli(Rng& rng, double p) {
  std::bernoulli_distribution dist(p);
  return dist(rng);
}

}  // namespace kout
