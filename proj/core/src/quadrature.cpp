#include "bohmlw/quadrature.hpp"

#include <map>
#include <mutex>

namespace bohmlw {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre r;
  r.nodes.resize(n);
  r.weights.resize(n);
  constexpr double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

SphereRule sphere_rule(int n_theta) {
  constexpr double pi = 3.14159265358979323846;
  const GaussLegendre& gl = gauss_legendre(n_theta);
  const int n_phi = 2 * n_theta;
  SphereRule rule;
  rule.directions.reserve(std::size_t(n_theta) * n_phi);
  rule.weights.reserve(std::size_t(n_theta) * n_phi);
  for (int i = 0; i < n_theta; ++i) {
    const double ct = gl.nodes[i];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * pi * (j + 0.5) / n_phi;
      rule.directions.push_back({st * std::cos(phi), st * std::sin(phi), ct});
      rule.weights.push_back(gl.weights[i] * 2.0 * pi / n_phi);
    }
  }
  return rule;
}

}  // namespace bohmlw
