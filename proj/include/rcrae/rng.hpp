#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace rcrae {

/// splitmix64 step; used to derive independent per-task streams from one
/// master seed so parallel work stays reproducible.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Hash-chains a master seed with a path of stream indices.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = master;
  std::uint64_t out = splitmix64(s);
  for (std::uint64_t p : path) {
    s = out ^ (p + 0x9e3779b97f4a7c15ULL);
    out = splitmix64(s);
  }
  return out;
}

inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace rcrae
