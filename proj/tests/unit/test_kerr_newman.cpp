#include <doctest.h>

#include <cmath>

#include "bohmlw/kerr_newman.hpp"
#include "test_support.hpp"

using namespace bohmlw;

TEST_SUITE("fast") {

TEST_CASE("real source reproduces the shifted Coulomb field") {
  // z0 = 0: pure Coulomb.
  const double q = 1.3;
  for (double r : {0.5, 2.0, 40.0}) {
    const RSVector w = kn_static_field(Vec3{0, 0, r}, CVec3{}, q);
    CHECK(std::abs(w[2] - Complex(q / (r * r))) < 1e-12 * q / (r * r));
    CHECK(std::abs(w[0]) == 0.0);
    CHECK(std::abs(w[1]) == 0.0);
  }

  // Real displacement: exact Coulomb about the shifted center.
  const CVec3 z0{Complex(0.4), Complex(-1.2), Complex(2.0)};
  for (std::uint64_t i = 0; i < 50; ++i) {
    Vec3 x;
    for (int k = 0; k < 3; ++k) x[k] = testutil::rnd(31, std::uint64_t(k), i, -5, 5);
    const double dx = x[0] - 0.4, dy = x[1] + 1.2, dz = x[2] - 2.0;
    const double r2 = dx * dx + dy * dy + dz * dz;
    if (r2 < 0.3) continue;
    const double r3 = std::pow(r2, 1.5);
    const RSVector w = kn_static_field(x, z0, q);
    CHECK(std::abs(w[0] - Complex(q * dx / r3)) < 1e-12 * q / r2);
    CHECK(std::abs(w[1] - Complex(q * dy / r3)) < 1e-12 * q / r2);
    CHECK(std::abs(w[2] - Complex(q * dz / r3)) < 1e-12 * q / r2);
    CHECK(std::abs(w[0].imag()) < 1e-14);
  }
}

TEST_CASE("imaginary displacement carries the magnetic dipole of a g=2 source") {
  const double b = 0.5, q = 2.0;
  const CVec3 z0{Complex(0), Complex(0), Complex(0, b)};

  // On the symmetry axis at r = 100 b the imaginary part of W_z is the axial
  // field of a magnetic dipole with moment m = q b: Im W_z = 2 m / r^3.
  const double r = 100.0 * b;
  const RSVector w = kn_static_field(Vec3{0, 0, r}, z0, q);
  const double m_fit = w[2].imag() * r * r * r / 2.0;
  CHECK(std::abs(m_fit - q * b) / (q * b) < 0.01);

  // The monopole electric part survives in the real projection.
  CHECK(w[2].real() * r * r == doctest::Approx(q).epsilon(1e-3));

  // Convergence of the fitted moment with radius (multipole corrections are
  // O((b/r)^2), so the misfit shrinks by ~4 when r doubles).
  const RSVector w2 = kn_static_field(Vec3{0, 0, 2.0 * r}, z0, q);
  const double m_fit2 = w2[2].imag() * 8.0 * r * r * r / 2.0;
  CHECK(std::abs(m_fit2 - q * b) < 0.3 * std::abs(m_fit - q * b));
}

TEST_CASE("singular ring detection") {
  const double b = 1.0;
  const CVec3 z0{Complex(0), Complex(0), Complex(0, b)};
  // The ring is the circle rho = b in the equatorial plane.
  CHECK_THROWS_AS(kn_static_field(Vec3{b, 0, 0}, z0, 1.0), OnSingularRing);
  CHECK(std::abs(kn_ring_distance2(Vec3{b, 0, 0}, z0)) < 1e-12);
  // Slightly off the ring the residual |(x - z0)^2| is small but nonzero.
  const double eps = 1e-3;
  const Complex d2 = kn_ring_distance2(Vec3{b + eps, 0, 0}, z0);
  CHECK(std::abs(d2) > 1e-12);
  CHECK(std::abs(d2) < 5e-3);
}

TEST_CASE("second sheet flips the apparent charge") {
  const CVec3 z0{Complex(0), Complex(0), Complex(0, 0.3)};
  const RSVector plus = kn_static_field(Vec3{1, 2, 3}, z0, 1.0, +1);
  const RSVector minus = kn_static_field(Vec3{1, 2, 3}, z0, 1.0, -1);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(plus[k] + minus[k]) < 1e-15);
}

}  // TEST_SUITE
