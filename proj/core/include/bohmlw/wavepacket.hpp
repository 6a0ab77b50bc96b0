/// \file wavepacket.hpp
/// Free-particle Gaussian wavepacket of the covariant (world-time s)
/// Schroedinger-type wave equation
///     i hbar d_s Psi = -(hbar^2 / 2M) d_mu d^mu Psi ,
/// separable across the four Minkowski axes. The time-axis factor evolves
/// like an ordinary 1d free Gaussian, the spatial factors obey the complex
/// conjugate equation, giving complex widths
///     Sigma_0(s) = sigma_I0 (1 + i Gamma(0) s),
///     Sigma_j(s) = sigma_Ij (1 - i Gamma(j) s),   Gamma(mu) = hbar / (2 M sigma_Imu^2).
#pragma once

#include <array>

#include "bohmlw/four_vector.hpp"

namespace bohmlw {

struct PacketParams {
  FourVector u;                       // drift s-velocity, u = hbar k / M
  std::array<double, 4> sigma_initial{1.0, 1.0, 1.0, 1.0};
  double mass = 1.0;
  double hbar = 1.0;

  /// Gamma(mu) = hbar / (2 M sigma_Imu^2); the packet-spreading rate per axis.
  double gamma(int mu) const { return hbar / (2.0 * mass * sigma_initial[mu] * sigma_initial[mu]); }

  /// True when all four Gamma(mu) agree to relative 1e-12.
  bool equal_gamma() const;

  /// Common Gamma; throws UnequalGamma when the four values differ.
  double gamma_common() const;

  /// Wave vector k = M u / hbar.
  FourVector wavevector() const {
    FourVector k = u;
    return k *= mass / hbar;
  }

  /// Throws InvalidInput unless sigma_I > 0, M > 0, hbar > 0.
  void validate() const;
};

struct ComplexWidth {
  Complex sigma;     // Sigma_mu(s)
  double sigma_abs;  // |Sigma_mu(s)| = sigma_Imu (1 + Gamma^2 s^2)^{1/2}
};

ComplexWidth sigma_complex(const PacketParams& p, double s, int mu);

/// Wavefunction value; product of the four normalized Gaussian factors and
/// the plane-wave phase exp(i k.(x - u s/2)).
Complex psi(const PacketParams& p, const FourVector& x, double s);

/// |psi|^2 in closed form.
double density(const PacketParams& p, const FourVector& x, double s);

/// ln |psi|^2 (safe in the far tails where density underflows).
double log_density(const PacketParams& p, const FourVector& x, double s);

/// Bohm action S_B = hbar Im ln psi, evaluated per factor analytically so the
/// phase never wraps; defined modulo an additive function of s alone (that
/// term plays no role in the trajectories). Throws NodalPoint below the
/// underflow floor.
double bohm_action(const PacketParams& p, const FourVector& x, double s);

/// V^mu = d^mu S_B / M (index raised with the metric), in closed form.
FourVector velocity_field(const PacketParams& p, const FourVector& x, double s);

struct MassSquared {
  double value = 0.0;   // M^2 V_B.V_B along the trajectory
  bool timelike = false;
};

/// Variable mass along the closed-form trajectory through x0 = X_B(0) on the
/// given sheet (+1/-1).
MassSquared mass_squared(const PacketParams& p, const FourVector& x0, int sheet, double s);

}  // namespace bohmlw
