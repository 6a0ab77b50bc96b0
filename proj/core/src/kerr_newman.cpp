#include "bohmlw/kerr_newman.hpp"

#include <cmath>

namespace bohmlw {

Complex kn_ring_distance2(const Vec3& x, const CVec3& z0) {
  Complex d2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Complex d = Complex(x[i]) - z0[i];
    d2 += d * d;
  }
  return d2;
}

RSVector kn_static_field(const Vec3& x, const CVec3& z0, double q, int sheet) {
  const Complex d2 = kn_ring_distance2(x, z0);
  if (std::abs(d2) < tol::ring_proximity)
    throw OnSingularRing("kn_static_field: field point on the complexified ring, |(x-z0)^2| = " +
                         std::to_string(std::abs(d2)));

  // -grad q/sqrt(d2) = q (x - z0) / d2^{3/2}
  const Complex root = double(sheet) * std::sqrt(d2);
  const Complex inv32 = 1.0 / (root * root * root);
  RSVector w;
  for (int i = 0; i < 3; ++i) w[i] = q * (Complex(x[i]) - z0[i]) * inv32;
  return w;
}

}  // namespace bohmlw
