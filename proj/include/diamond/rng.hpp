// Counter-based deterministic random numbers: every draw is a pure function
// of (seed, stream, counter), so results are independent of batching and
// evaluation order.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace diamond {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter) {
  const std::uint64_t key = splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return splitmix64(key ^ (counter * 0xd1342543de82ef95ULL));
}

// Uniform in (0, 1); the offset keeps log(u) finite.
inline double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return static_cast<double>(counter_hash(seed, stream, counter) >> 11) * 0x1p-53 +
         0x1p-54;
}

// Standard normal via Box-Muller; consumes counters 2c and 2c+1.
inline double standard_normal(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t counter) {
  const double u1 = uniform01(seed, stream, 2 * counter);
  const double u2 = uniform01(seed, stream, 2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace diamond
