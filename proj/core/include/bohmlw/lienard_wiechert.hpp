/// \file lienard_wiechert.hpp
/// Null world-time roots in the complex s plane and single-root
/// Lienard-Wiechert potentials/fields for the Gaussian trajectory family.
///
/// For equal Gamma the null condition (x - u s - A f(s) - O)^2 = 0,
/// f = (1 + Gamma^2 s^2)^{1/2}, rationalizes to a quartic that factors as the
/// product of the two sheet conditions. Roots come from companion-matrix
/// eigenvalues, are assigned to the sheet whose unrationalized equation they
/// satisfy, and are Newton-polished on that equation.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bohmlw/faraday.hpp"
#include "bohmlw/trajectory.hpp"

namespace bohmlw {

enum class RootKind { Retarded, Advanced, ComplexPair };

struct NullRoot {
  Complex s;
  int sheet = +1;            // sign of the sqrt factor at the root
  RootKind kind = RootKind::Retarded;
  double residual = 0.0;     // |(x - X(s))^2| after polishing
};

struct NullRootDiagnostics {
  int quartic_degree = 4;    // degree after deflation
  int discarded = 0;         // eigenvalues that polished onto no sheet
};

/// All null roots of the trajectory seen from the real field point x.
/// Requires equal Gamma across axes. Retarded/advanced classification is by
/// the sign of Re(x^0 - X^0(s)); roots with |Im s| above tolerance are
/// flagged ComplexPair.
std::vector<NullRoot> null_roots(const FourVector& x, const GaussTrajectory& t,
                                 NullRootDiagnostics* diag = nullptr);

/// The member's own retarded root: real kind Retarded on sheet +1. Throws
/// NoRetardedRoot if there is none.
NullRoot retarded_root(const FourVector& x, const GaussTrajectory& t);

/// Scale used to normalize root residuals and denominator guards,
/// max(1, |x - X(0)|).
double lw_scale(const FourVector& x, const GaussTrajectory& t);

/// A^mu = q V^mu / (V.(x - X)) at the root.
CFourVector lw_potential(const FourVector& x, const GaussTrajectory& t, const NullRoot& root,
                         double q);

/// Potential and Faraday tensor of one root, evaluated together.
struct LWField {
  CFourVector a;
  FaradayC f;
};
LWField lw_field(const FourVector& x, const GaussTrajectory& t, const NullRoot& root, double q);

/// Faraday tensor of a single root,
///   F = q / D * d/ds [ (Delta^mu V^nu - Delta^nu V^mu) / D ],  D = V.Delta,
/// with the s derivative evaluated in closed form.
FaradayC lw_faraday(const FourVector& x, const GaussTrajectory& t, const NullRoot& root, double q);

/// Velocity/acceleration split of the same tensor: `velocity_part` carries no
/// acceleration and falls off like 1/R^2, `acceleration_part` is the
/// radiative 1/R piece. Their sum is lw_faraday.
struct LWSplit {
  FaradayC velocity_part;
  FaradayC acceleration_part;
};
LWSplit lw_faraday_split(const FourVector& x, const GaussTrajectory& t, const NullRoot& root,
                         double q);

/// Static 4-current sampled on a rectangular spatial grid (cell-centered),
/// optionally modulated by an analytic time profile.
struct CurrentGrid {
  Vec3 origin{};                      // center of the first cell
  Vec3 spacing{1.0, 1.0, 1.0};
  std::array<int, 3> counts{1, 1, 1};
  std::vector<FourVector> j;          // J^mu per cell, x-fastest ordering
  std::function<Complex(Complex)> time_profile;  // default: constant 1

  std::size_t index(int ix, int iy, int iz) const {
    return std::size_t(ix) + counts[0] * (std::size_t(iy) + std::size_t(counts[1]) * iz);
  }
  Vec3 cell_center(int ix, int iy, int iz) const {
    return {origin[0] + ix * spacing[0], origin[1] + iy * spacing[1], origin[2] + iz * spacing[2]};
  }
};

/// Retarded potential of the sampled current, displaced by a constant
/// (complex) offset O:
///   A^mu(x) = sum_cells J^mu(x') g(t_r) dV / sqrt((x - x' - O)^2),
///   t_r = x^0 - O^0 - sqrt((x - x' - O)^2),
/// principal square root (continuous from large |x|). Throws BranchAmbiguity
/// if any cell sits on the complexified ring.
CFourVector displaced_retarded_potential(const FourVector& x, const CurrentGrid& grid,
                                         const CFourVector& offset);

}  // namespace bohmlw
