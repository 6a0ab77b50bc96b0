#include "bohmlw/polynomial.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "bohmlw/errors.hpp"

namespace bohmlw {

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, double deflate_rel) {
  double cmax = 0.0;
  for (const Complex& c : coeffs) cmax = std::max(cmax, std::abs(c));
  if (cmax == 0.0) throw DegenerateQuartic("polynomial_roots: identically zero polynomial");

  int degree = int(coeffs.size()) - 1;
  while (degree > 0 && std::abs(coeffs[degree]) < deflate_rel * cmax) --degree;
  if (degree == 0) return {};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  const Complex lead = coeffs[degree];
  for (int k = 0; k < degree; ++k) {
    companion(k, degree - 1) = -coeffs[k] / lead;
    if (k + 1 < degree) companion(k + 1, k) = 1.0;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(degree);
  for (int k = 0; k < degree; ++k) roots[k] = solver.eigenvalues()(k);
  return roots;
}

Complex polynomial_eval(std::span<const Complex> coeffs, Complex z) {
  Complex v = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * z + coeffs[k];
  return v;
}

int argument_principle_count(std::span<const Complex> coeffs, Complex center, double radius,
                             int samples) {
  // Winding = total continuous change of arg p(z) around the contour / 2 pi.
  constexpr double pi = 3.14159265358979323846;
  double total = 0.0;
  Complex prev = polynomial_eval(coeffs, center + radius);
  for (int i = 1; i <= samples; ++i) {
    const double phi = 2.0 * pi * i / samples;
    const Complex z = center + radius * Complex(std::cos(phi), std::sin(phi));
    const Complex cur = polynomial_eval(coeffs, z);
    total += std::arg(cur / prev);  // in (-pi, pi]; fine for small steps
    prev = cur;
  }
  return int(std::lround(total / (2.0 * pi)));
}

}  // namespace bohmlw
