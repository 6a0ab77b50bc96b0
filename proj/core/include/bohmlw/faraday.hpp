/// \file faraday.hpp
/// Complex Faraday tensors, the Riemann-Silberstein packaging W = E + iB,
/// projection to real physical fields and the electromagnetic stress tensor.
///
/// Index conventions (signature +,-,-,-):
///   E^i = F^{i0},  B^i = -1/2 eps^{ijk} F_{jk}  (so F^{jk} = -eps^{jkl} B_l),
///   eps^{0123} = +1.
/// With these, W^{mu nu} = F + i *F satisfies *W = -iW and W^{i0} = E^i + iB^i,
/// and the Poynting vector (i/2) W x conj(W) comes out as E x B.
#pragma once

#include <array>

#include "bohmlw/four_vector.hpp"

namespace bohmlw {

/// Complex antisymmetric field tensor W^{mu nu} (upper indices).
struct FaradayC {
  CMat4 w;

  Complex& operator()(int i, int j) { return w(i, j); }
  Complex operator()(int i, int j) const { return w(i, j); }

  FaradayC& operator+=(const FaradayC& o) {
    for (int i = 0; i < 16; ++i) w.m[i] += o.w.m[i];
    return *this;
  }
  FaradayC& operator*=(Complex s) {
    for (int i = 0; i < 16; ++i) w.m[i] *= s;
    return *this;
  }
};

inline FaradayC operator+(FaradayC a, const FaradayC& b) { return a += b; }
inline FaradayC operator*(Complex s, FaradayC a) { return a *= s; }

/// Riemann-Silberstein 3-vector W = E + iB.
struct RSVector {
  CVec3 w{};

  Complex& operator[](int i) { return w[i]; }
  Complex operator[](int i) const { return w[i]; }
};

/// Real symmetric stress-energy tensor T^{mu nu} (Gaussian units, the 4 pi
/// lives inside the tensor definition).
struct StressEnergy {
  Mat4 t;

  double& operator()(int i, int j) { return t(i, j); }
  double operator()(int i, int j) const { return t(i, j); }
};

double max_abs(const Mat4& m);
double max_abs(const CMat4& m);

/// Hodge dual *F^{mu nu} = 1/2 eps^{mu nu a b} F_{ab} of a (possibly complex)
/// antisymmetric tensor with upper indices.
CMat4 dual(const CMat4& f);
Mat4 dual(const Mat4& f);

/// Assemble a real antisymmetric tensor from E and B fields.
Mat4 faraday_from_fields(const Vec3& e, const Vec3& b);

/// W = F + i *F. Throws NotAntisymmetric when F isn't. The result is
/// anti-self-dual by construction.
FaradayC make_asd(const Mat4& f);

/// RS face of an anti-self-dual tensor: w_i = W^{i0}.
RSVector rs_of(const FaradayC& w);

/// Rebuild the full anti-self-dual tensor from its RS vector.
FaradayC rs_to_faraday(const RSVector& w);

/// Physical field on the real slice: elementwise real part.
Mat4 physical_field(const FaradayC& w);

/// Energy density 1/2 conj(w).w and Poynting vector (i/2) w x conj(w)
/// of an RS vector (tiny imaginary residue discarded).
struct EnergyPoynting {
  double energy = 0.0;
  Vec3 poynting{};
};
EnergyPoynting energy_poynting(const RSVector& w);

/// 4 pi T^{mu nu} = F^mu_l F^{l nu} + 1/4 eta^{mu nu} F_ab F^ab on the real
/// physical tensor; traceless and symmetric.
StressEnergy stress_energy(const Mat4& f_phys);

}  // namespace bohmlw
