#include "bohmlw/faraday.hpp"

#include <algorithm>
#include <cmath>

namespace bohmlw {

namespace {

// Totally antisymmetric symbol with upper indices, eps^{0123} = +1.
int eps4(int i, int j, int k, int l) {
  const int d = (j - i) * (k - i) * (l - i) * (k - j) * (l - j) * (l - k);
  return (d > 0) - (d < 0);
}

void check_antisymmetric(const Mat4& f, const char* where) {
  double worst = 0.0, scale = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      worst = std::max(worst, std::abs(f(i, j) + f(j, i)));
      scale = std::max(scale, std::abs(f(i, j)));
    }
  if (worst > tol::antisymmetry * std::max(1.0, scale))
    throw NotAntisymmetric(std::string(where) + ": input tensor not antisymmetric");
}

}  // namespace

double max_abs(const Mat4& m) {
  double r = 0.0;
  for (double v : m.m) r = std::max(r, std::abs(v));
  return r;
}

double max_abs(const CMat4& m) {
  double r = 0.0;
  for (const Complex& v : m.m) r = std::max(r, std::abs(v));
  return r;
}

CMat4 dual(const CMat4& f) {
  // *F^{mn} = 1/2 eps^{mnab} F_{ab}, F_{ab} = eta_aa eta_bb F^{ab}.
  CMat4 r;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      Complex s = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          const int e = eps4(m, n, a, b);
          if (e != 0) s += 0.5 * double(e) * metric_sign(a) * metric_sign(b) * f(a, b);
        }
      r(m, n) = s;
    }
  return r;
}

Mat4 dual(const Mat4& f) {
  Mat4 r;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          const int e = eps4(m, n, a, b);
          if (e != 0) s += 0.5 * double(e) * metric_sign(a) * metric_sign(b) * f(a, b);
        }
      r(m, n) = s;
    }
  return r;
}

Mat4 faraday_from_fields(const Vec3& e, const Vec3& b) {
  Mat4 f;
  for (int i = 0; i < 3; ++i) {
    f(i + 1, 0) = e[i];
    f(0, i + 1) = -e[i];
  }
  // F^{jk} = -eps^{jkl} B_l
  f(1, 2) = -b[2];
  f(2, 1) = b[2];
  f(2, 3) = -b[0];
  f(3, 2) = b[0];
  f(3, 1) = -b[1];
  f(1, 3) = b[1];
  return f;
}

FaradayC make_asd(const Mat4& f) {
  check_antisymmetric(f, "make_asd");
  const Mat4 df = dual(f);
  FaradayC w;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w(i, j) = Complex(f(i, j), df(i, j));
  return w;
}

RSVector rs_of(const FaradayC& w) {
  RSVector r;
  for (int i = 0; i < 3; ++i) r[i] = w(i + 1, 0);
  return r;
}

FaradayC rs_to_faraday(const RSVector& v) {
  FaradayC w;
  for (int i = 0; i < 3; ++i) {
    w(i + 1, 0) = v[i];
    w(0, i + 1) = -v[i];
  }
  // Anti-self-duality fixes the magnetic block: W^{jk} = i eps^{jkl} w_l.
  const Complex I(0.0, 1.0);
  w(1, 2) = I * v[2];
  w(2, 1) = -I * v[2];
  w(2, 3) = I * v[0];
  w(3, 2) = -I * v[0];
  w(3, 1) = I * v[1];
  w(1, 3) = -I * v[1];
  return w;
}

Mat4 physical_field(const FaradayC& w) {
  Mat4 f;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) f(i, j) = w(i, j).real();
  return f;
}

EnergyPoynting energy_poynting(const RSVector& w) {
  EnergyPoynting r;
  for (int i = 0; i < 3; ++i) r.energy += 0.5 * std::norm(w[i]);
  // (i/2) w x conj(w) is real up to roundoff since w x conj(w) is anti-Hermitian.
  const Complex I(0.0, 1.0);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const Complex p = 0.5 * I * (w[j] * std::conj(w[k]) - w[k] * std::conj(w[j]));
    r.poynting[i] = p.real();
  }
  return r;
}

StressEnergy stress_energy(const Mat4& f) {
  check_antisymmetric(f, "stress_energy");

  double ff = 0.0;  // F_ab F^ab
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) ff += metric_sign(a) * metric_sign(b) * f(a, b) * f(a, b);

  StressEnergy t;
  constexpr double four_pi = 4.0 * 3.14159265358979323846;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double s = 0.0;  // F^m_l F^{l n}
      for (int l = 0; l < 4; ++l) s += f(m, l) * metric_sign(l) * f(l, n);
      const double eta = (m == n) ? metric_sign(m) : 0.0;
      t(m, n) = (s + 0.25 * eta * ff) / four_pi;
    }
  return t;
}

}  // namespace bohmlw
