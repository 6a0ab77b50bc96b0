#include <doctest.h>

#include <cmath>

#include "bohmlw/constants.hpp"
#include "bohmlw/quadrature.hpp"
#include "bohmlw/wavepacket.hpp"
#include "test_support.hpp"

using namespace bohmlw;
using testutil::rnd;

namespace {

PacketParams packet_gamma1() {
  // hbar = 2, M = 1, sigma = 1 gives Gamma(mu) = 1 on every axis.
  PacketParams p;
  p.u = FourVector{{1.0, 0.2, -0.1, 0.05}};
  p.sigma_initial = {1, 1, 1, 1};
  p.mass = 1.0;
  p.hbar = 2.0;
  return p;
}

// 4d norm of |psi|^2 by per-axis Simpson quadrature over +/- 8 sigma(s); the
// separable integrand makes the tensor-product sum a product of axis sums.
double norm4d(const PacketParams& p, double s) {
  double norm = 1.0;
  for (int mu = 0; mu < 4; ++mu) {
    const double width = sigma_complex(p, s, mu).sigma_abs;
    const int n = 257;
    const double lo = p.u[mu] * s - 8.0 * width, hi = p.u[mu] * s + 8.0 * width;
    const double h = (hi - lo) / (n - 1);
    double axis = 0.0;
    for (int i = 0; i < n; ++i) {
      FourVector x = p.u;
      x *= s;
      x[mu] = lo + i * h;
      // Only axis mu deviates from the center, so the other factors are the
      // per-axis peak values; divide them out to isolate this axis' factor.
      double other = 1.0;
      for (int nu = 0; nu < 4; ++nu) {
        if (nu == mu) continue;
        const double w = sigma_complex(p, s, nu).sigma_abs;
        other /= std::sqrt(2.0 * 3.14159265358979323846 * w * w);
      }
      const double f = density(p, x, s) / other;
      axis += h / 3.0 * ((i == 0 || i == n - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0)) * f;
    }
    norm *= axis;
  }
  return norm;
}

}  // namespace

TEST_SUITE("fast") {

TEST_CASE("complex widths") {
  const PacketParams p = packet_gamma1();
  for (int mu = 0; mu < 4; ++mu) {
    const ComplexWidth w0 = sigma_complex(p, 0.0, mu);
    CHECK(w0.sigma == Complex(1.0, 0.0));
    CHECK(w0.sigma_abs == 1.0);
  }

  // Gamma = 1, s = 1, time axis: Sigma = sigma (1 + i), |Sigma| = sigma sqrt2.
  const ComplexWidth w = sigma_complex(p, 1.0, 0);
  CHECK(w.sigma.real() == doctest::Approx(1.0));
  CHECK(w.sigma.imag() == doctest::Approx(1.0));
  CHECK(w.sigma_abs == doctest::Approx(std::sqrt(2.0)));

  // Spatial axes evolve with the conjugate width.
  CHECK(sigma_complex(p, 1.0, 2).sigma.imag() == doctest::Approx(-1.0));

  // |Sigma(s)| = sigma (1 + Gamma^2 s^2)^{1/2}, Re Sigma = sigma_I.
  for (std::uint64_t i = 0; i < 200; ++i) {
    const double s = rnd(41, 0, i, -10, 10);
    const int mu = int(i % 4);
    const ComplexWidth ws = sigma_complex(p, s, mu);
    CHECK(ws.sigma.real() == doctest::Approx(1.0));
    CHECK(ws.sigma_abs == doctest::Approx(std::sqrt(1.0 + s * s)).epsilon(1e-12));
    CHECK(std::abs(ws.sigma) == doctest::Approx(ws.sigma_abs).epsilon(1e-12));
  }
}

TEST_CASE("initial density and 4d normalization") {
  const PacketParams p = packet_gamma1();
  constexpr double two_pi = 2.0 * 3.14159265358979323846;

  // |psi(x, 0)|^2 is the plain product Gaussian; the drift phase drops out.
  for (std::uint64_t i = 0; i < 50; ++i) {
    FourVector x;
    for (int mu = 0; mu < 4; ++mu) x[mu] = rnd(42, mu, i, -3, 3);
    double expect = 1.0;
    for (int mu = 0; mu < 4; ++mu)
      expect *= std::exp(-x[mu] * x[mu] / 2.0) / std::sqrt(two_pi);
    CHECK(std::norm(psi(p, x, 0.0)) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(density(p, x, 0.0) == doctest::Approx(expect).epsilon(1e-12));
  }

  // Norm 1 at s = 0 and after substantial spreading, and conserved.
  CHECK(std::abs(norm4d(p, 0.0) - 1.0) < 1e-6);
  CHECK(std::abs(norm4d(p, 3.0) - 1.0) < 1e-6);  // s = 3 / Gamma
  CHECK(std::abs(norm4d(p, 1.0) - norm4d(p, 5.0)) < 1e-6);
}

TEST_CASE("psi solves the covariant wave equation (finite differences)") {
  const PacketParams p = packet_gamma1();
  const double hs = 2e-4, hx = 2e-4;
  const Complex I(0, 1);
  for (std::uint64_t i = 0; i < 24; ++i) {
    FourVector x;
    for (int mu = 0; mu < 4; ++mu) x[mu] = rnd(43, mu, i, -1.5, 1.5);
    const double s = rnd(43, 9, i, -1.0, 1.0);

    const Complex dpsi_ds = (psi(p, x, s + hs) - psi(p, x, s - hs)) / (2.0 * hs);
    Complex box = 0.0;  // d^mu d_mu = d0^2 - sum_j dj^2
    for (int mu = 0; mu < 4; ++mu) {
      FourVector xp = x, xm = x;
      xp[mu] += hx;
      xm[mu] -= hx;
      const Complex second =
          (psi(p, xp, s) - 2.0 * psi(p, x, s) + psi(p, xm, s)) / (hx * hx);
      box += metric_sign(mu) * second;
    }
    const Complex residual = I * p.hbar * dpsi_ds + p.hbar * p.hbar / (2.0 * p.mass) * box;
    const double scale = std::abs(p.hbar * p.hbar / (2.0 * p.mass) * box) + 1e-12;
    CHECK(std::abs(residual) / scale < 1e-6);
  }
}

TEST_CASE("bohm action gradient matches the closed-form velocity") {
  const PacketParams p = packet_gamma1();
  const double h = 1e-5;

  // Center of a k = 0 packet: spatial gradient vanishes.
  PacketParams rest = p;
  rest.u = FourVector{{0, 0, 0, 0}};  // k = 0 (off-shell rest packet)
  for (int j = 1; j < 4; ++j) {
    FourVector xp{}, xm{};
    xp[j] = h;
    xm[j] = -h;
    const double grad = (bohm_action(rest, xp, 0.7) - bohm_action(rest, xm, 0.7)) / (2 * h);
    CHECK(std::abs(grad) < 1e-9);
  }

  // d S / d x^mu = M eta_{mu mu} V^mu against central differences.
  for (std::uint64_t i = 0; i < 40; ++i) {
    FourVector x;
    for (int mu = 0; mu < 4; ++mu) x[mu] = rnd(44, mu, i, -2, 2);
    const double s = rnd(44, 9, i, -2, 2);
    const FourVector v = velocity_field(p, x, s);
    for (int mu = 0; mu < 4; ++mu) {
      FourVector xp = x, xm = x;
      xp[mu] += h;
      xm[mu] -= h;
      const double grad = (bohm_action(p, xp, s) - bohm_action(p, xm, s)) / (2 * h);
      const double expect = p.mass * metric_sign(mu) * v[mu];
      CHECK(std::abs(grad - expect) < 1e-6 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST_CASE("plane-wave limit") {
  PacketParams wide;
  wide.u = FourVector{{1.0, 0.3, 0.0, -0.2}};
  wide.sigma_initial = {1e4, 1e4, 1e4, 1e4};
  wide.mass = 1.0;
  wide.hbar = 1.0;
  const FourVector k = wide.wavevector();

  const double h = 1e-3;
  for (std::uint64_t i = 0; i < 10; ++i) {
    FourVector x;
    for (int mu = 0; mu < 4; ++mu) x[mu] = rnd(45, mu, i, -5, 5);
    const double s = rnd(45, 9, i, -5, 5);
    // S_B -> hbar k^alpha x_alpha + f(s): gradient is hbar k (index lowered).
    for (int mu = 0; mu < 4; ++mu) {
      FourVector xp = x, xm = x;
      xp[mu] += h;
      xm[mu] -= h;
      const double grad = (bohm_action(wide, xp, s) - bohm_action(wide, xm, s)) / (2 * h);
      CHECK(std::abs(grad - wide.hbar * metric_sign(mu) * k[mu]) < 1e-6);
    }
    // V = p / M everywhere.
    const FourVector v = velocity_field(wide, x, s);
    for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(v[mu] - wide.u[mu]) < 1e-6);
  }
}

TEST_CASE("velocity field on the packet center and on a trajectory") {
  const PacketParams p = packet_gamma1();
  for (double s : {-3.0, 0.0, 0.4, 2.0}) {
    FourVector center = p.u;
    center *= s;
    const FourVector v = velocity_field(p, center, s);
    for (int mu = 0; mu < 4; ++mu) CHECK(v[mu] == doctest::Approx(p.u[mu]));
  }

  // At X_B+(s) with X_B(0) = (0, sigma, 0, 0), Gamma = 1, s = 1:
  // V^1 = u^1 + sigma / sqrt(2).
  FourVector on_traj = p.u;
  on_traj *= 1.0;
  on_traj[1] += 1.0 * std::sqrt(2.0);  // X(0) f(1)
  const FourVector v = velocity_field(p, on_traj, 1.0);
  CHECK(v[1] == doctest::Approx(p.u[1] + 1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("continuity of the world-time density") {
  const PacketParams p = packet_gamma1();
  const double h = 4e-4;
  for (std::uint64_t i = 0; i < 100; ++i) {
    FourVector x;
    for (int mu = 0; mu < 4; ++mu) x[mu] = rnd(46, mu, i, -2, 2);
    const double s = rnd(46, 9, i, -2, 2);

    const double drho_ds = (density(p, x, s + h) - density(p, x, s - h)) / (2 * h);
    double div = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      FourVector xp = x, xm = x;
      xp[mu] += h;
      xm[mu] -= h;
      div += (velocity_field(p, xp, s)[mu] * density(p, xp, s) -
              velocity_field(p, xm, s)[mu] * density(p, xm, s)) /
             (2 * h);
    }
    const double scale = std::abs(drho_ds) + std::abs(div) + 1e-9;
    CHECK(std::abs(drho_ds + div) / scale < 1e-5);
  }
}

TEST_CASE("variable mass along trajectories") {
  const PacketParams p = packet_gamma1();

  // A = 0 rides the drift: m^2 = M^2 u.u for all s.
  const double uu = minkowski_dot(p.u, p.u);
  for (double s : {0.0, 1.5, 20.0})
    CHECK(mass_squared(p, FourVector{}, +1, s).value == doctest::Approx(uu).epsilon(1e-13));

  // At s = 0 the velocity correction vanishes for every starting point.
  CHECK(mass_squared(p, FourVector{{0.4, -1.0, 2.0, 0.3}}, -1, 0.0).value ==
        doctest::Approx(uu).epsilon(1e-13));

  // Electron scale, 1 Angstrom spatial displacement: the asymptotic kick is
  // 0.00193c, so |m^2/M^2 - 1| = (0.00193)^2 < 5e-6 as s -> infinity.
  PacketParams electron;
  electron.u = FourVector{{1, 0, 0, 0}};
  electron.sigma_initial = {1, 1, 1, 1};
  electron.mass = 1.0;
  electron.hbar = constants::hbar_internal_electron;
  const double s_late = 1e4 / electron.gamma(0);
  const MassSquared late =
      mass_squared(electron, FourVector{{0, 1, 0, 0}}, +1, s_late);
  CHECK(std::abs(late.value - 1.0) < 5e-6);
  CHECK(late.timelike);

  // A large spacelike start goes tachyonic asymptotically and is flagged.
  PacketParams p1 = packet_gamma1();
  p1.u = FourVector{{1, 0, 0, 0}};
  const MassSquared tachyon = mass_squared(p1, FourVector{{0, 3.0, 0, 0}}, +1, 50.0);
  CHECK(tachyon.value < 0.0);
  CHECK_FALSE(tachyon.timelike);
}

TEST_CASE("near-on-shell mass spread bound") {
  // For equal widths and on-shell drift, |m^2(s) - M^2| / M^2 stays under
  // (|X(0)| Gamma) (2 |u| + |X(0)| Gamma) for all s (Euclidean norms bound
  // the Minkowski dots).
  for (std::uint64_t i = 0; i < 300; ++i) {
    PacketParams p;
    p.u = testutil::random_on_shell(47, i);
    const double sigma = rnd(47, 4, i, 0.5, 2.0);
    p.sigma_initial = {sigma, sigma, sigma, sigma};
    p.mass = rnd(47, 5, i, 0.5, 2.0);
    p.hbar = rnd(47, 6, i, 0.5, 2.0);
    FourVector a;
    for (int mu = 0; mu < 4; ++mu) a[mu] = rnd(47, 7 + mu, i, -1.0, 1.0);
    const double s = rnd(47, 11, i, -50.0, 50.0);
    const int sheet = (i % 2) ? +1 : -1;

    const double m2 = mass_squared(p, a, sheet, s).value;
    const double kick = component_norm(a) * p.gamma(0);
    const double bound = kick * (2.0 * component_norm(p.u) + kick);
    CHECK(std::abs(m2 / (p.mass * p.mass) - 1.0) <= bound * (1.0 + 1e-12));
  }
}

TEST_CASE("nodal guard fires only in the deep tails") {
  const PacketParams p = packet_gamma1();
  CHECK_NOTHROW(velocity_field(p, FourVector{{8, 8, 8, 8}}, 0.0));
  CHECK_THROWS_AS(velocity_field(p, FourVector{{60, 60, 60, 60}}, 0.0), NodalPoint);
  CHECK_THROWS_AS(bohm_action(p, FourVector{{60, 60, 60, 60}}, 0.0), NodalPoint);
}

TEST_CASE("packet validation") {
  PacketParams bad = packet_gamma1();
  bad.sigma_initial[2] = -1.0;
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
  PacketParams unequal = packet_gamma1();
  unequal.sigma_initial[1] = 2.0;
  CHECK_THROWS_AS(unequal.gamma_common(), UnequalGamma);
  CHECK(packet_gamma1().equal_gamma());
}

}  // TEST_SUITE
