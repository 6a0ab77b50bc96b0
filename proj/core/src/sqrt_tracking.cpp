#include "bohmlw/sqrt_tracking.hpp"

#include <cmath>

namespace bohmlw {

using Cx = std::complex<double>;

double segment_distance(Cx a, Cx b, Cx p) {
  const Cx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
  t = std::min(1.0, std::max(0.0, t));
  return std::abs(p - (a + t * ab));
}

namespace {

// One tracking step from (z0, w0) to z1. Returns false when the +/- choice is
// too ambiguous at this step length.
bool step(const std::function<Cx(Cx)>& g, Cx z1, Cx& w, int& steps) {
  const Cx c = std::sqrt(g(z1));
  const double d_plus = std::abs(c - w);
  const double d_minus = std::abs(-c - w);
  const double near = std::min(d_plus, d_minus);
  const double far = std::max(d_plus, d_minus);
  // far == 0 means w itself vanished: sitting on a branch point.
  if (far <= 0.0 || near > tol::step_ambiguity * far) return false;
  w = (d_plus <= d_minus) ? c : -c;
  ++steps;
  return true;
}

void advance(const std::function<Cx(Cx)>& g, Cx z0, Cx z1, Cx& w, int& steps, int depth) {
  Cx trial = w;
  int trial_steps = steps;
  if (step(g, z1, trial, trial_steps)) {
    w = trial;
    steps = trial_steps;
    return;
  }
  if (depth <= 0 || std::abs(z1 - z0) < 1e-14 * (1.0 + std::abs(z0)))
    throw StepTooCoarse("sqrt tracking: root choice ambiguous after maximal bisection");
  const Cx mid = 0.5 * (z0 + z1);
  advance(g, z0, mid, w, steps, depth - 1);
  advance(g, mid, z1, w, steps, depth - 1);
}

}  // namespace

SqrtTrack track_sqrt(const std::function<Cx(Cx)>& g, std::span<const Cx> path,
                     std::span<const Cx> branch_points) {
  if (path.size() < 2) throw InvalidInput("track_sqrt: path needs at least two points");

  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    for (const Cx& bp : branch_points)
      if (segment_distance(path[i], path[i + 1], bp) < tol::path_min_distance)
        throw PathThroughBranchPoint("sqrt tracking: path passes a branch point");

  SqrtTrack out;
  Cx w = std::sqrt(g(path[0]));
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    advance(g, path[i], path[i + 1], w, out.steps, 48);

  out.value = w;
  const Cx principal = std::sqrt(g(path.back()));
  out.parity = (std::abs(w - principal) <= std::abs(w + principal)) ? 0 : 1;
  return out;
}

}  // namespace bohmlw
