/// \file four_vector.hpp
/// Minkowski four-vector algebra over real and complex components,
/// metric signature (+,-,-,-), c = 1. The Minkowski dot is bilinear
/// (no conjugation): it is the analytic continuation of the real form.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "bohmlw/errors.hpp"
#include "bohmlw/tolerances.hpp"

namespace bohmlw {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using CVec3 = std::array<Complex, 3>;

struct FourVector {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

  double& operator[](std::size_t i) { return c[i]; }
  double operator[](std::size_t i) const { return c[i]; }

  FourVector& operator+=(const FourVector& o) {
    for (int i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  FourVector& operator-=(const FourVector& o) {
    for (int i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  FourVector& operator*=(double s) {
    for (int i = 0; i < 4; ++i) c[i] *= s;
    return *this;
  }
};

struct CFourVector {
  std::array<Complex, 4> c{};

  CFourVector() = default;
  CFourVector(Complex c0, Complex c1, Complex c2, Complex c3) : c{c0, c1, c2, c3} {}
  explicit CFourVector(const FourVector& v) : c{v[0], v[1], v[2], v[3]} {}

  Complex& operator[](std::size_t i) { return c[i]; }
  Complex operator[](std::size_t i) const { return c[i]; }

  CFourVector& operator+=(const CFourVector& o) {
    for (int i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
  }
  CFourVector& operator-=(const CFourVector& o) {
    for (int i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
  }
  CFourVector& operator*=(Complex s) {
    for (int i = 0; i < 4; ++i) c[i] *= s;
    return *this;
  }
};

inline FourVector operator+(FourVector a, const FourVector& b) { return a += b; }
inline FourVector operator-(FourVector a, const FourVector& b) { return a -= b; }
inline FourVector operator*(double s, FourVector a) { return a *= s; }
inline FourVector operator*(FourVector a, double s) { return a *= s; }
inline FourVector operator-(FourVector a) { return a *= -1.0; }

inline CFourVector operator+(CFourVector a, const CFourVector& b) { return a += b; }
inline CFourVector operator-(CFourVector a, const CFourVector& b) { return a -= b; }
inline CFourVector operator*(Complex s, CFourVector a) { return a *= s; }
inline CFourVector operator*(CFourVector a, Complex s) { return a *= s; }
inline CFourVector operator-(CFourVector a) { return a *= Complex(-1.0); }

/// Metric component eta^{mu mu} (diagonal), eta = diag(1,-1,-1,-1).
inline constexpr double metric_sign(int mu) { return mu == 0 ? 1.0 : -1.0; }

/// Bilinear Minkowski dot a.b = a0 b0 - a1 b1 - a2 b2 - a3 b3.
inline double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

inline Complex minkowski_dot(const CFourVector& a, const CFourVector& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

inline FourVector real_part(const CFourVector& v) {
  return FourVector{{v[0].real(), v[1].real(), v[2].real(), v[3].real()}};
}

inline FourVector imag_part(const CFourVector& v) {
  return FourVector{{v[0].imag(), v[1].imag(), v[2].imag(), v[3].imag()}};
}

/// Euclidean norm over (complex) components; used only for scale estimates.
inline double component_norm(const CFourVector& v) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::norm(v[i]);
  return std::sqrt(s);
}

inline double component_norm(const FourVector& v) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += v[i] * v[i];
  return std::sqrt(s);
}

/// Dense 4x4 real matrix, row-major. Small enough that a bespoke type
/// beats dragging a linear-algebra dependency into the public headers.
struct Mat4 {
  std::array<double, 16> m{};

  double& operator()(int i, int j) { return m[4 * i + j]; }
  double operator()(int i, int j) const { return m[4 * i + j]; }

  static Mat4 identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
  }
};

struct CMat4 {
  std::array<Complex, 16> m{};

  Complex& operator()(int i, int j) { return m[4 * i + j]; }
  Complex operator()(int i, int j) const { return m[4 * i + j]; }
};

inline FourVector operator*(const Mat4& L, const FourVector& v) {
  FourVector r;
  for (int i = 0; i < 4; ++i) {
    double s = 0.0;
    for (int j = 0; j < 4; ++j) s += L(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

inline CFourVector operator*(const Mat4& L, const CFourVector& v) {
  CFourVector r;
  for (int i = 0; i < 4; ++i) {
    Complex s = 0.0;
    for (int j = 0; j < 4; ++j) s += L(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

/// Pure Lorentz boost taking the rest-frame time axis (1,0,0,0) to the
/// proper velocity u. Requires u real, on shell (u.u = 1) and future
/// pointing (u0 > 0).
Mat4 boost(const FourVector& u);

}  // namespace bohmlw
