/// \file polynomial.hpp
/// Complex polynomial roots via companion-matrix eigenvalues, plus an
/// argument-principle zero counter used to cross-check root counts.
#pragma once

#include <span>
#include <vector>

#include "bohmlw/four_vector.hpp"

namespace bohmlw {

/// Roots of sum_k c[k] z^k. Near-zero leading coefficients (relative to the
/// largest coefficient) are deflated before the companion matrix is formed.
/// Returns an empty list for (non-zero) constants; throws DegenerateQuartic
/// when every coefficient vanishes.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs,
                                      double deflate_rel = 1e-14);

Complex polynomial_eval(std::span<const Complex> coeffs, Complex z);

/// Number of zeros (with multiplicity) of the polynomial inside the circle
/// |z - center| = radius, by the winding number of the image contour.
int argument_principle_count(std::span<const Complex> coeffs, Complex center, double radius,
                             int samples = 4096);

}  // namespace bohmlw
