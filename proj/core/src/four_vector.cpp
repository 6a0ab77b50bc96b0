#include "bohmlw/four_vector.hpp"

#include <string>

namespace bohmlw {

Mat4 boost(const FourVector& u) {
  const double uu = minkowski_dot(u, u);
  if (std::abs(uu - 1.0) > tol::on_shell)
    throw NotOnShell("boost: u.u = " + std::to_string(uu) + ", expected 1");
  if (u[0] <= 0.0)
    throw NonOrthochronous("boost: u0 = " + std::to_string(u[0]) + " <= 0");

  // Standard form: L00 = gamma, L0i = Li0 = u_i, Lij = d_ij + u_i u_j / (1 + gamma).
  const double gamma = u[0];
  Mat4 L;
  L(0, 0) = gamma;
  for (int i = 1; i < 4; ++i) {
    L(0, i) = u[i];
    L(i, 0) = u[i];
    for (int j = 1; j < 4; ++j)
      L(i, j) = (i == j ? 1.0 : 0.0) + u[i] * u[j] / (1.0 + gamma);
  }
  return L;
}

}  // namespace bohmlw
