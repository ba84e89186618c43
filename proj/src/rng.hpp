#pragma once

#include <cstdint>
#include <random>

// Distribution helpers with pinned arithmetic, so a seed reproduces the same
// stream under every standard library.
namespace pcaf::detail {

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace pcaf::detail
