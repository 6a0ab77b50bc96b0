/// \file sqrt_tracking.hpp
/// Continuation of w(z) = sqrt(g(z)) along a polyline in the complex plane by
/// stepwise root tracking: at each step the candidate +/- sqrt(g) closer to
/// the running value is chosen, with adaptive bisection of the step until the
/// choice is unambiguous. The endpoint is compared against the principal
/// branch to decide the sheet parity.
#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "bohmlw/errors.hpp"
#include "bohmlw/tolerances.hpp"

namespace bohmlw {

struct SqrtTrack {
  std::complex<double> value;  // continued sqrt(g) at the endpoint
  int parity = 0;              // 0: principal sheet at the endpoint, 1: flipped
  int steps = 0;               // accepted steps (diagnostic)
};

/// Continue sqrt(g) along `path` starting from the principal branch at
/// path[0]. `branch_points` are the zeros of g; the path must clear them by
/// tol::path_min_distance (checked segment-wise), else PathThroughBranchPoint.
/// Throws StepTooCoarse if bisection bottoms out while the root choice is
/// still ambiguous.
SqrtTrack track_sqrt(const std::function<std::complex<double>(std::complex<double>)>& g,
                     std::span<const std::complex<double>> path,
                     std::span<const std::complex<double>> branch_points);

/// Distance from point p to the segment [a, b].
double segment_distance(std::complex<double> a, std::complex<double> b, std::complex<double> p);

}  // namespace bohmlw
