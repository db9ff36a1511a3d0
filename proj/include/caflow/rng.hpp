#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace caflow {

// splitmix64: used to derive independent sub-seeds from (seed, key) pairs so
// every pipeline case can be reproduced in isolation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) {
  return splitmix64(splitmix64(seed) ^ key);
}

// Fisher-Yates with an explicit bounded draw. std::shuffle's distribution is
// implementation-defined; this keeps shuffles identical across toolchains.
template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::uint64_t bound = i;
    std::uint64_t r = rng() % bound;  // negligible modulo bias at these sizes
    std::swap(v[i - 1], v[r]);
  }
}

}  // namespace caflow
