#include "bohmlw/wavepacket.hpp"

#include <cmath>
#include <string>

namespace bohmlw {

namespace {
constexpr double two_pi = 2.0 * 3.14159265358979323846;

// log |psi| threshold matching |psi| ~ 1e-300.
const double kNodalLog = std::log(1e-300);
}  // namespace

bool PacketParams::equal_gamma() const {
  const double g0 = gamma(0);
  for (int mu = 1; mu < 4; ++mu)
    if (std::abs(gamma(mu) - g0) > 1e-12 * g0) return false;
  return true;
}

double PacketParams::gamma_common() const {
  if (!equal_gamma())
    throw UnequalGamma("packet does not have equal Gamma(mu) across axes");
  return gamma(0);
}

void PacketParams::validate() const {
  for (int mu = 0; mu < 4; ++mu)
    if (!(sigma_initial[mu] > 0.0))
      throw InvalidInput("packet sigmaI[" + std::to_string(mu) + "] must be > 0");
  if (!(mass > 0.0)) throw InvalidInput("packet mass must be > 0");
  if (!(hbar > 0.0)) throw InvalidInput("packet hbar must be > 0");
}

ComplexWidth sigma_complex(const PacketParams& p, double s, int mu) {
  const double g = p.gamma(mu);
  const double si = p.sigma_initial[mu];
  // Time axis spreads like the non-relativistic Gaussian, spatial axes obey
  // the conjugate equation.
  const double sign = (mu == 0) ? 1.0 : -1.0;
  const Complex sigma = si * Complex(1.0, sign * g * s);
  return ComplexWidth{sigma, si * std::sqrt(1.0 + g * s * g * s)};
}

Complex psi(const PacketParams& p, const FourVector& x, double s) {
  const FourVector k = p.wavevector();
  const double phase = minkowski_dot(k, x) - 0.5 * minkowski_dot(k, p.u) * s;

  Complex log_factor(0.0, phase);
  for (int mu = 0; mu < 4; ++mu) {
    const ComplexWidth w = sigma_complex(p, s, mu);
    const double d = x[mu] - p.u[mu] * s;
    // (2 pi Sigma^2)^{-1/4} exp(-(x - u s)^2 / (4 Sigma sigma_I)); Re Sigma > 0
    // keeps the principal log continuous in s.
    log_factor += -0.25 * std::log(Complex(two_pi)) - 0.5 * std::log(w.sigma) -
                  d * d / (4.0 * w.sigma * p.sigma_initial[mu]);
  }
  return std::exp(log_factor);
}

double log_density(const PacketParams& p, const FourVector& x, double s) {
  double ld = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const ComplexWidth w = sigma_complex(p, s, mu);
    const double d = x[mu] - p.u[mu] * s;
    ld += -0.5 * std::log(two_pi * w.sigma_abs * w.sigma_abs) -
          d * d / (2.0 * w.sigma_abs * w.sigma_abs);
  }
  return ld;
}

double density(const PacketParams& p, const FourVector& x, double s) {
  return std::exp(log_density(p, x, s));
}

double bohm_action(const PacketParams& p, const FourVector& x, double s) {
  if (0.5 * log_density(p, x, s) < kNodalLog)
    throw NodalPoint("bohm_action: |psi| below the nodal floor");

  const FourVector k = p.wavevector();
  double sb = minkowski_dot(k, x) - 0.5 * minkowski_dot(k, p.u) * s;
  for (int mu = 0; mu < 4; ++mu) {
    const ComplexWidth w = sigma_complex(p, s, mu);
    const double d = x[mu] - p.u[mu] * s;
    sb += d * d * w.sigma.imag() /
          (4.0 * p.sigma_initial[mu] * w.sigma_abs * w.sigma_abs);
  }
  return p.hbar * sb;
}

FourVector velocity_field(const PacketParams& p, const FourVector& x, double s) {
  if (0.5 * log_density(p, x, s) < kNodalLog)
    throw NodalPoint("velocity_field: |psi| below the nodal floor");

  FourVector v = p.u;
  for (int mu = 0; mu < 4; ++mu) {
    const double g = p.gamma(mu);
    v[mu] += (x[mu] - p.u[mu] * s) * g * g * s / (1.0 + g * s * g * s);
  }
  return v;
}

MassSquared mass_squared(const PacketParams& p, const FourVector& x0, int sheet, double s) {
  FourVector v = p.u;
  for (int mu = 0; mu < 4; ++mu) {
    const double g = p.gamma(mu);
    v[mu] += double(sheet) * x0[mu] * g * g * s / std::sqrt(1.0 + g * s * g * s);
  }
  const double m2 = p.mass * p.mass * minkowski_dot(v, v);
  return MassSquared{m2, m2 > 0.0};
}

}  // namespace bohmlw
