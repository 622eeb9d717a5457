#pragma once

#include <cstdint>

namespace cheeger2d {

// splitmix64 step: the standard 64-bit finalizer-based generator, used here
// only to derive independent substream seeds from (seed, index) pairs so that
// parallel work items are reproducible regardless of scheduling.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s = seed ^ (0x9e3779b97f4a7c15ull * (index + 1));
  std::uint64_t b = splitmix64(s);
  return a ^ b;
}

}  // namespace cheeger2d
