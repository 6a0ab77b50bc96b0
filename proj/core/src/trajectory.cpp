#include "bohmlw/trajectory.hpp"

#include <cmath>

#include "bohmlw/sqrt_tracking.hpp"

namespace bohmlw {

Complex sheet_factor(const GaussTrajectory& t, Complex s, int mu) {
  const double g = t.params.gamma(mu);
  const Complex arg = 1.0 + g * g * s * s;
  if (std::abs(arg) < tol::branch_point)
    throw AtBranchPoint("sheet_factor: s at a branch point of axis " + std::to_string(mu));
  return std::sqrt(arg);
}

CFourVector position(const GaussTrajectory& t, Complex s) {
  CFourVector x;
  for (int mu = 0; mu < 4; ++mu)
    x[mu] = t.params.u[mu] * s + t.amplitude[mu] * sheet_factor(t, s, mu) + t.spin_offset[mu];
  return x;
}

CFourVector velocity(const GaussTrajectory& t, Complex s) {
  CFourVector v;
  for (int mu = 0; mu < 4; ++mu) {
    const double g = t.params.gamma(mu);
    v[mu] = t.params.u[mu] + t.amplitude[mu] * g * g * s / sheet_factor(t, s, mu);
  }
  return v;
}

CFourVector acceleration(const GaussTrajectory& t, Complex s) {
  CFourVector a;
  for (int mu = 0; mu < 4; ++mu) {
    const double g = t.params.gamma(mu);
    const Complex f = sheet_factor(t, s, mu);
    a[mu] = t.amplitude[mu] * g * g / (f * f * f);
  }
  return a;
}

BranchPoints branch_points(const GaussTrajectory& t) {
  BranchPoints bp;
  for (int mu = 0; mu < 4; ++mu) {
    const double g = t.params.gamma(mu);
    bp.plus[mu] = Complex(0.0, 1.0 / g);
    bp.minus[mu] = Complex(0.0, -1.0 / g);
  }
  return bp;
}

ContinuationResult continue_sheet(const GaussTrajectory& t, std::span<const Complex> path) {
  const BranchPoints bp = branch_points(t);
  ContinuationResult out;
  const Complex s_end = path.back();
  for (int mu = 0; mu < 4; ++mu) {
    const double g = t.params.gamma(mu);
    const std::array<Complex, 2> points{bp.plus[mu], bp.minus[mu]};
    const SqrtTrack track =
        track_sqrt([g](Complex s) { return 1.0 + g * g * s * s; }, path, points);
    out.flips[mu] = track.parity;
    out.endpoint[mu] = t.params.u[mu] * s_end + t.amplitude[mu] * track.value + t.spin_offset[mu];
  }
  return out;
}

TrajectoryClass classify(const GaussTrajectory& t, double s_lo, double s_hi, int samples) {
  if (!t.amplitude_is_real()) return TrajectoryClass::ComplexAmplitude;
  if (samples < 2) samples = 2;
  for (int i = 0; i < samples; ++i) {
    const double s = s_lo + (s_hi - s_lo) * i / (samples - 1);
    const CFourVector v = velocity(t, s);
    if (minkowski_dot(v, v).real() <= 0.0) return TrajectoryClass::SpacelikeSomewhere;
  }
  return TrajectoryClass::Timelike;
}

CFourVector pair_momentum_avg(const GaussTrajectory& t, double s) {
  GaussTrajectory other = t;
  other.amplitude = -t.amplitude;
  CFourVector avg = velocity(t, s) + velocity(other, s);
  return avg *= Complex(0.5 * t.params.mass);
}

CMat4 pair_angular_momentum_avg(const GaussTrajectory& t, double s) {
  GaussTrajectory mirror = t;
  mirror.amplitude = -t.amplitude;
  const GaussTrajectory& other = mirror;
  CMat4 m;
  for (const GaussTrajectory* traj : {&t, &other}) {
    // Orbital part about the packet center: the constant offset O is not a
    // dynamical coordinate, so it is excluded from the moment arm.
    CFourVector x = position(*traj, s) - traj->spin_offset;
    CFourVector v = velocity(*traj, s);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) += 0.5 * (x[i] * v[j] - x[j] * v[i]);
  }
  return m;
}

CFourVector boosted_spin_offset(const Vec3& j, double m, const FourVector& u) {
  const Mat4 lambda = boost(u);  // throws NotOnShell / NonOrthochronous
  CFourVector rest;
  rest[0] = 0.0;
  for (int i = 0; i < 3; ++i) rest[i + 1] = Complex(0.0, j[i] / m);
  return lambda * rest;
}

std::vector<Vec3> holland_nr(const Vec3& x0, const Vec3& u, double sigma0, double m, double hbar,
                             std::span<const double> times) {
  if (!(sigma0 > 0.0)) throw InvalidInput("holland_nr: sigma0 must be > 0");
  std::vector<Vec3> path;
  path.reserve(times.size());
  const double gamma = hbar / (2.0 * m * sigma0 * sigma0);
  for (double t : times) {
    const double f = std::sqrt(1.0 + gamma * t * gamma * t);
    path.push_back({u[0] * t + x0[0] * f, u[1] * t + x0[1] * f, u[2] * t + x0[2] * f});
  }
  return path;
}

}  // namespace bohmlw
