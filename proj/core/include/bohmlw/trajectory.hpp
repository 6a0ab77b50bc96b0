/// \file trajectory.hpp
/// Closed-form trajectory family of the Gaussian packet,
///     X^mu(s) = u^mu s + A^mu f_mu(s) + O^mu,
///     f_mu(s) = (1 + Gamma(mu)^2 s^2)^{1/2},  f_mu(0) = +1,
/// with complex amplitude A (real A are the Bohmian members; A -> -A is the
/// second Riemann sheet) and a constant complex spin displacement O. The
/// principal branch puts the cuts on the imaginary rays |Im s| >= 1/Gamma,
/// which joins the two branch points through infinity and keeps the whole
/// real s axis cut-free.
#pragma once

#include <array>
#include <span>
#include <vector>

#include "bohmlw/four_vector.hpp"
#include "bohmlw/wavepacket.hpp"

namespace bohmlw {

struct GaussTrajectory {
  PacketParams params;
  CFourVector amplitude;    // A = X_B(0), complex in the continued family
  CFourVector spin_offset;  // O, constant additive displacement (default 0)

  bool amplitude_is_real() const {
    for (int mu = 0; mu < 4; ++mu)
      if (amplitude[mu].imag() != 0.0) return false;
    return true;
  }
};

/// f_mu(s) on the principal sheet. Throws AtBranchPoint when
/// |1 + Gamma^2 s^2| is below tolerance.
Complex sheet_factor(const GaussTrajectory& t, Complex s, int mu);

CFourVector position(const GaussTrajectory& t, Complex s);
CFourVector velocity(const GaussTrajectory& t, Complex s);
CFourVector acceleration(const GaussTrajectory& t, Complex s);

/// Per-axis branch points s = +/- i / Gamma(mu).
struct BranchPoints {
  std::array<Complex, 4> plus;
  std::array<Complex, 4> minus;
};
BranchPoints branch_points(const GaussTrajectory& t);

/// Analytic continuation of the position along a polyline of complex s
/// values. Sheet flips are reported per axis (0 = back on the principal
/// sheet, 1 = flipped); on a closed loop this is the winding parity around
/// that axis' branch-point pair.
struct ContinuationResult {
  CFourVector endpoint;
  std::array<int, 4> flips{};
  int total_flips() const { return flips[0] + flips[1] + flips[2] + flips[3]; }
};
ContinuationResult continue_sheet(const GaussTrajectory& t, std::span<const Complex> path);

enum class TrajectoryClass { Timelike, SpacelikeSomewhere, ComplexAmplitude };

/// Samples Re(V.V) over [s_lo, s_hi]; Timelike requires a real amplitude and
/// a positive sign everywhere on the grid.
TrajectoryClass classify(const GaussTrajectory& t, double s_lo, double s_hi, int samples);

/// (V_+ + V_-) M / 2 = M u, algebraically exact for every amplitude.
CFourVector pair_momentum_avg(const GaussTrajectory& t, double s);

/// (X_+ ^ V_+ + X_- ^ V_-) / 2 about the packet center; vanishes when all
/// Gamma(mu) are equal (asserted by tests only in that case).
CMat4 pair_angular_momentum_avg(const GaussTrajectory& t, double s);

/// Rest-frame spin displacement (0, i J / m) boosted to proper velocity u.
CFourVector boosted_spin_offset(const Vec3& j, double m, const FourVector& u);

/// Non-relativistic (Schroedinger) trajectory
///     X(t) = u t + x0 (1 + (hbar t / 2 m sigma0^2)^2)^{1/2}.
std::vector<Vec3> holland_nr(const Vec3& x0, const Vec3& u, double sigma0, double m, double hbar,
                             std::span<const double> times);

}  // namespace bohmlw
