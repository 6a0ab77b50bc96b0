/// \file rng.hpp
/// Counter-based random numbers: sample i is a pure function of
/// (seed, stream, i), so parallel draws need no shared state and results
/// are identical for any thread count.
#pragma once

#include <cstdint>

namespace bohmlw {

/// SplitMix64 finalizer; bijective 64-bit mixing.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t i) {
  // Two mixing rounds decorrelate the (seed, stream, counter) lanes.
  return mix64(mix64(seed ^ 0x243f6a8885a308d3ull) + mix64(stream * 0x452821e638d01377ull + i));
}

/// Uniform deviate in the open interval (0, 1).
inline double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t i) {
  return (counter_hash(seed, stream, i) >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

/// Standard normal deviate (Box-Muller; consumes two uniforms per index).
double normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t i);

/// Inverse of the standard normal CDF, solved by Newton iteration on erfc
/// (machine precision for p in (1e-300, 1 - 1e-16)).
double inverse_normal_cdf(double p);

}  // namespace bohmlw
