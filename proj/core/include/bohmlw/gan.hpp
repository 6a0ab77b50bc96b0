/// \file gan.hpp
/// Generalized analytic continuation by partition of unity: a multivalued
/// function is replaced by the weighted sum of its Riemann-sheet values at a
/// common base point, with complex weights summing to one. For sqrt-type
/// functions the construction spans exactly { X sqrt(z) : X complex }.
#pragma once

#include <vector>

#include "bohmlw/four_vector.hpp"
#include "bohmlw/trajectory.hpp"

namespace bohmlw {

/// Complex partition of unity P_1..P_N.
struct GanWeights {
  std::vector<Complex> p;

  /// Throws WeightsNotNormalized unless sum P_i = 1 within tolerance.
  static GanWeights make(std::vector<Complex> weights);
};

/// Values of a function on its N Riemann sheets at one base point.
struct SheetedValue {
  std::vector<Complex> f;
};

/// sum_i P_i f_i; throws DimensionMismatch when sizes differ.
Complex combine(const GanWeights& w, const SheetedValue& v);

/// The two sheets of sqrt at z: (principal, -principal); z = 0 is the branch
/// point and is rejected.
SheetedValue sqrt_sheets(Complex z);

enum class CompositionKind { Sum, Product };
enum class CompositionRule { Allowed, Forbidden };

/// Continuation of a sum (product) equals the sum (product) of continuations
/// only when at least one operand is single-sheeted; this guard gates such
/// compositions at the API level.
CompositionRule check_nonlinearity_guard(CompositionKind kind, int sheets_a, int sheets_b);

/// The continued trajectory family generated from one seed with A^mu != 0 on
/// every axis: any amplitude A' indexes a member, the real A' are exactly the
/// Bohmian subfamily.
class TrajectoryFamily {
 public:
  /// Throws ZeroAmplitudeAxis when the seed amplitude vanishes on some axis.
  explicit TrajectoryFamily(const GaussTrajectory& seed);

  const GaussTrajectory& seed() const { return seed_; }

  /// Member with amplitude a (complex in general; real = Bohmian member).
  GaussTrajectory member(const CFourVector& a) const;
  GaussTrajectory member(const FourVector& a) const;

  /// The seed's second Riemann sheet, reached by negating the amplitude.
  GaussTrajectory second_sheet() const;

 private:
  GaussTrajectory seed_;
};

}  // namespace bohmlw
