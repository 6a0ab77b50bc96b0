// Shared helpers for the unit tests: deterministic random draws and small
// oracles kept independent of the library code they check.
#pragma once

#include <cmath>
#include <complex>

#include "bohmlw/four_vector.hpp"
#include "bohmlw/rng.hpp"

namespace testutil {

using bohmlw::Complex;
using bohmlw::FourVector;

inline double rnd(std::uint64_t seed, std::uint64_t stream, std::uint64_t i, double lo, double hi) {
  return lo + (hi - lo) * bohmlw::uniform01(seed, stream, i);
}

/// Random future-pointing on-shell proper velocity with moderate speed.
inline FourVector random_on_shell(std::uint64_t seed, std::uint64_t i, double vmax = 0.8) {
  const double vx = rnd(seed, 101, i, -vmax, vmax) / 1.8;
  const double vy = rnd(seed, 102, i, -vmax, vmax) / 1.8;
  const double vz = rnd(seed, 103, i, -vmax, vmax) / 1.8;
  const double g = 1.0 / std::sqrt(1.0 - vx * vx - vy * vy - vz * vz);
  return FourVector{{g, g * vx, g * vy, g * vz}};
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
}

inline double rel_diff(Complex a, Complex b) {
  return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
}

}  // namespace testutil
