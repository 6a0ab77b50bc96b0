#include "bohmlw/rng.hpp"

#include <cmath>

namespace bohmlw {

namespace {
constexpr double two_pi = 2.0 * 3.14159265358979323846;
constexpr double inv_sqrt_2pi = 0.3989422804014326779;
}  // namespace

double normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t i) {
  const double u1 = uniform01(seed, stream, 2 * i);
  const double u2 = uniform01(seed, stream, 2 * i + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

double inverse_normal_cdf(double p) {
  // Crude logistic-flavored starting guess, then Newton with the exact CDF.
  // Phi(x) = erfc(-x / sqrt(2)) / 2.
  double x;
  if (p <= 0.0) return -HUGE_VAL;
  if (p >= 1.0) return HUGE_VAL;
  const double q = p < 0.5 ? p : 1.0 - p;
  const double t = std::sqrt(-2.0 * std::log(q));
  x = t - (2.515517 + 0.802853 * t + 0.010328 * t * t) /
              (1.0 + 1.432788 * t + 0.189269 * t * t + 0.001308 * t * t * t);
  if (p < 0.5) x = -x;

  for (int iter = 0; iter < 8; ++iter) {
    const double cdf = 0.5 * std::erfc(-x * 0.7071067811865475244);
    const double pdf = inv_sqrt_2pi * std::exp(-0.5 * x * x);
    if (pdf <= 0.0) break;
    const double dx = (cdf - p) / pdf;
    x -= dx;
    if (std::abs(dx) < 1e-15 * (1.0 + std::abs(x))) break;
  }
  return x;
}

}  // namespace bohmlw
