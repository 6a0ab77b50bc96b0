#include "bohmlw/gan.hpp"

#include <cmath>
#include <string>

namespace bohmlw {

GanWeights GanWeights::make(std::vector<Complex> weights) {
  if (weights.empty()) throw InvalidInput("GanWeights: need N >= 1 weights");
  Complex sum = 0.0;
  for (const Complex& w : weights) sum += w;
  if (std::abs(sum - 1.0) > tol::weight_sum)
    throw WeightsNotNormalized("GanWeights: sum P_i = " + std::to_string(sum.real()) + "+" +
                               std::to_string(sum.imag()) + "i, expected 1");
  return GanWeights{std::move(weights)};
}

Complex combine(const GanWeights& w, const SheetedValue& v) {
  if (w.p.size() != v.f.size())
    throw DimensionMismatch("combine: " + std::to_string(w.p.size()) + " weights vs " +
                            std::to_string(v.f.size()) + " sheet values");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < w.p.size(); ++i) sum += w.p[i] * v.f[i];
  return sum;
}

SheetedValue sqrt_sheets(Complex z) {
  if (std::abs(z) == 0.0) throw AtBranchPoint("sqrt_sheets: z = 0 is the branch point");
  const Complex r = std::sqrt(z);
  return SheetedValue{{r, -r}};
}

CompositionRule check_nonlinearity_guard(CompositionKind, int sheets_a, int sheets_b) {
  // A single-sheeted operand (an entire function) is what makes the
  // continuation distribute over sums and products alike.
  return (sheets_a <= 1 || sheets_b <= 1) ? CompositionRule::Allowed : CompositionRule::Forbidden;
}

TrajectoryFamily::TrajectoryFamily(const GaussTrajectory& seed) : seed_(seed) {
  for (int mu = 0; mu < 4; ++mu)
    if (std::abs(seed.amplitude[mu]) == 0.0)
      throw ZeroAmplitudeAxis("TrajectoryFamily: seed amplitude vanishes on axis " +
                              std::to_string(mu));
}

GaussTrajectory TrajectoryFamily::member(const CFourVector& a) const {
  GaussTrajectory t = seed_;
  t.amplitude = a;
  return t;
}

GaussTrajectory TrajectoryFamily::member(const FourVector& a) const {
  return member(CFourVector(a));
}

GaussTrajectory TrajectoryFamily::second_sheet() const {
  GaussTrajectory t = seed_;
  t.amplitude = -seed_.amplitude;
  return t;
}

}  // namespace bohmlw
