/// \file quadrature.hpp
/// Deterministic adaptive quadrature (Gauss-Legendre panels, whole-vs-split
/// error control) plus Gauss-Legendre node generation and a product rule on
/// the sphere. Works for scalar, complex and small-array integrands.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "bohmlw/errors.hpp"
#include "bohmlw/tolerances.hpp"

namespace bohmlw {

struct QuadratureOptions {
  double rel_tol = tol::quad_rel;
  double abs_tol = tol::quad_abs;
  int max_depth = tol::quad_max_depth;
};

/// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton iteration on
/// the Legendre recurrence (machine precision, no tables).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int n);

namespace detail {

inline double quad_norm(double v) { return std::abs(v); }
inline double quad_norm(const std::complex<double>& v) { return std::abs(v); }
template <class T, std::size_t N>
double quad_norm(const std::array<T, N>& v) {
  double r = 0.0;
  for (const auto& x : v) r = std::max(r, quad_norm(x));
  return r;
}

inline void quad_axpy(double& acc, double w, double v) { acc += w * v; }
inline void quad_axpy(std::complex<double>& acc, double w, const std::complex<double>& v) {
  acc += w * v;
}
template <class T, std::size_t N>
void quad_axpy(std::array<T, N>& acc, double w, const std::array<T, N>& v) {
  for (std::size_t i = 0; i < N; ++i) quad_axpy(acc[i], w, v[i]);
}

template <class T, class F>
T panel(F& f, double a, double b, const GaussLegendre& rule) {
  T acc{};
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    T v = f(mid + half * rule.nodes[i]);
    quad_axpy(acc, half * rule.weights[i], v);
  }
  return acc;
}

template <class T, class F>
void adapt(F& f, double a, double b, const T& whole, double tol_here, double abs_floor,
           const GaussLegendre& rule, int depth, T& total) {
  const double mid = 0.5 * (a + b);
  const T left = panel<T>(f, a, mid, rule);
  const T right = panel<T>(f, mid, b, rule);
  T split = left;
  quad_axpy(split, 1.0, right);
  T diff = split;
  quad_axpy(diff, -1.0, whole);
  const double err = quad_norm(diff);
  if (err <= std::max(tol_here, abs_floor) || err <= 1e-16 * quad_norm(split)) {
    quad_axpy(total, 1.0, split);
    return;
  }
  if (depth <= 0)
    throw QuadratureNotConverged("adaptive quadrature: refinement limit reached, error " +
                                 std::to_string(err));
  adapt(f, a, mid, left, 0.5 * tol_here, abs_floor, rule, depth - 1, total);
  adapt(f, mid, b, right, 0.5 * tol_here, abs_floor, rule, depth - 1, total);
}

}  // namespace detail

/// Adaptive integral of f over [a, b]. T must be double, complex<double> or
/// std::array of those.
template <class T, class F>
T integrate_adaptive(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
  static const int kOrder = 10;
  const GaussLegendre& rule = gauss_legendre(kOrder);
  const T whole = detail::panel<T>(f, a, b, rule);
  // First refinement pass fixes the tolerance scale from a two-panel estimate.
  const double mid = 0.5 * (a + b);
  T est = detail::panel<T>(f, a, mid, rule);
  detail::quad_axpy(est, 1.0, detail::panel<T>(f, mid, b, rule));
  const double scale = detail::quad_norm(est);
  const double tol_here = std::max(opts.abs_tol, opts.rel_tol * scale);
  T total{};
  detail::adapt(f, a, b, whole, tol_here, opts.abs_tol, rule, opts.max_depth, total);
  return total;
}

/// Composite fixed-order Gauss-Legendre rule (deterministic, non-adaptive).
template <class T, class F>
T integrate_panels(F&& f, double a, double b, int panels, int order = 10) {
  const GaussLegendre& rule = gauss_legendre(order);
  T total{};
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    T v = detail::panel<T>(f, a + p * h, a + (p + 1) * h, rule);
    detail::quad_axpy(total, 1.0, v);
  }
  return total;
}

/// Product quadrature on the unit sphere: Gauss-Legendre in cos(theta) times
/// a uniform trapezoid in phi. Exact for spherical polynomials of degree
/// < 2 n_theta.
struct SphereRule {
  std::vector<std::array<double, 3>> directions;
  std::vector<double> weights;  // sum to 4 pi
};
SphereRule sphere_rule(int n_theta);

}  // namespace bohmlw
