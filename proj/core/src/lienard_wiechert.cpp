#include "bohmlw/lienard_wiechert.hpp"

#include <algorithm>
#include <cmath>

#include "bohmlw/polynomial.hpp"

namespace bohmlw {

namespace {

// Minkowski dots entering the rationalized root equation.
struct RootSetup {
  CFourVector y;  // x - O
  CFourVector a;  // amplitude
  FourVector u;
  Complex yy, yu, ya, uu, ua, aa;
  double gamma = 0.0;
  double a_scale = 0.0;
};

RootSetup make_setup(const FourVector& x, const GaussTrajectory& t) {
  RootSetup r;
  r.gamma = t.params.gamma_common();  // throws UnequalGamma
  r.y = CFourVector(x) - t.spin_offset;
  r.a = t.amplitude;
  r.u = t.params.u;
  const CFourVector uc(t.params.u);
  r.yy = minkowski_dot(r.y, r.y);
  r.yu = minkowski_dot(r.y, uc);
  r.ya = minkowski_dot(r.y, r.a);
  r.uu = minkowski_dot(uc, uc);
  r.ua = minkowski_dot(uc, r.a);
  r.aa = minkowski_dot(r.a, r.a);
  r.a_scale = component_norm(r.a);
  return r;
}

// (y - u s - sigma A sqrt(g))^2 and its s derivative -2 (y - X).V.
Complex sheet_residual(const RootSetup& r, Complex s, int sigma, Complex* deriv) {
  const Complex g = 1.0 + r.gamma * r.gamma * s * s;
  const Complex f = double(sigma) * std::sqrt(g);
  CFourVector w = r.y;
  CFourVector v;
  for (int mu = 0; mu < 4; ++mu) {
    w[mu] -= r.u[mu] * s + r.a[mu] * f;
    v[mu] = r.u[mu] + r.a[mu] * r.gamma * r.gamma * s / f;
  }
  if (deriv) *deriv = -2.0 * minkowski_dot(w, v);
  return minkowski_dot(w, w);
}

struct Candidate {
  Complex s;
  int sheet;
  double residual;
};

// Newton polish on the unrationalized sheet equation. Returns false when the
// iteration leaves the region or stalls above the residual target.
bool polish(const RootSetup& r, int sigma, Complex s0, double target, Candidate* out) {
  Complex s = s0;
  const double s_cap = 1e8 * (1.0 + std::abs(s0));
  double best_res = HUGE_VAL;
  Complex best_s = s0;
  for (int iter = 0; iter < 60; ++iter) {
    const Complex g = 1.0 + r.gamma * r.gamma * s * s;
    if (std::abs(g) < tol::branch_point) return false;
    Complex deriv;
    const Complex h = sheet_residual(r, s, sigma, &deriv);
    if (std::abs(h) < best_res) {
      best_res = std::abs(h);
      best_s = s;
    }
    if (std::abs(h) <= 1e-3 * target || std::abs(deriv) == 0.0) break;
    const Complex step = h / deriv;
    s -= step;
    if (std::abs(s) > s_cap) return false;
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(s))) break;
  }
  if (best_res > target) return false;
  *out = Candidate{best_s, sigma, best_res};
  return true;
}

GaussTrajectory on_sheet(const GaussTrajectory& t, int sheet) {
  GaussTrajectory r = t;
  if (sheet < 0) r.amplitude = -t.amplitude;
  return r;
}

struct RootGeometry {
  CFourVector delta;  // x - X(s)
  CFourVector v;      // V(s)
  CFourVector acc;    // dV/ds
  Complex d;          // V.delta
};

RootGeometry root_geometry(const FourVector& x, const GaussTrajectory& t, const NullRoot& root,
                           const char* where) {
  const GaussTrajectory ts = on_sheet(t, root.sheet);
  RootGeometry g;
  g.delta = CFourVector(x) - position(ts, root.s);
  g.v = velocity(ts, root.s);
  g.acc = acceleration(ts, root.s);
  g.d = minkowski_dot(g.v, g.delta);
  const double scale = lw_scale(x, t);
  if (std::abs(g.d) < tol::lw_denominator * scale)
    throw DenominatorVanishes(std::string(where) + ": V.(x-X) = " + std::to_string(std::abs(g.d)) +
                              " at the root (caustic)");
  return g;
}

FaradayC wedge(const CFourVector& a, const CFourVector& b, Complex scale) {
  FaradayC f;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) f(i, j) = scale * (a[i] * b[j] - a[j] * b[i]);
  return f;
}

}  // namespace

double lw_scale(const FourVector& x, const GaussTrajectory& t) {
  const CFourVector x0 = t.amplitude + t.spin_offset;
  return std::max(1.0, component_norm(CFourVector(x) - x0));
}

std::vector<NullRoot> null_roots(const FourVector& x, const GaussTrajectory& t,
                                 NullRootDiagnostics* diag) {
  const RootSetup r = make_setup(x, t);
  const double g2 = r.gamma * r.gamma;

  // [(y-us)^2 + A^2 g]^2 = [2 (y-us).A]^2 g, g = 1 + Gamma^2 s^2, expanded in s.
  const Complex p0 = r.yy + r.aa;
  const Complex p1 = -2.0 * r.yu;
  const Complex p2 = r.uu + r.aa * g2;
  const std::array<Complex, 5> coeffs{
      p0 * p0 - 4.0 * r.ya * r.ya,
      2.0 * p0 * p1 + 8.0 * r.ya * r.ua,
      p1 * p1 + 2.0 * p0 * p2 - 4.0 * r.ua * r.ua - 4.0 * r.ya * r.ya * g2,
      2.0 * p1 * p2 + 8.0 * r.ya * r.ua * g2,
      p2 * p2 - 4.0 * r.ua * r.ua * g2,
  };

  const std::vector<Complex> raw = polynomial_roots(coeffs, tol::quartic_deflate);
  if (diag) {
    double cmax = 0.0;
    for (const Complex& c : coeffs) cmax = std::max(cmax, std::abs(c));
    int deg = 4;
    while (deg > 0 && std::abs(coeffs[deg]) < tol::quartic_deflate * cmax) --deg;
    diag->quartic_degree = deg;
    diag->discarded = 0;
  }

  const double scale = lw_scale(x, t);
  const double target = tol::root_residual * scale * scale;

  std::vector<Candidate> cands;
  for (const Complex& s0 : raw) {
    bool any = false;
    // With A = 0 the two sheet equations coincide; try only sigma = +1 then.
    const int n_sheets = (r.a_scale == 0.0) ? 1 : 2;
    for (int k = 0; k < n_sheets; ++k) {
      const int sigma = (k == 0) ? +1 : -1;
      Candidate c;
      if (polish(r, sigma, s0, target, &c)) {
        cands.push_back(c);
        any = true;
      }
    }
    if (!any && diag) ++diag->discarded;
  }

  // Cluster duplicates (double eigenvalues, or both sheet trials landing on
  // the same zero), keeping the better residual.
  std::vector<Candidate> unique;
  for (const Candidate& c : cands) {
    bool merged = false;
    for (Candidate& u : unique) {
      if (u.sheet == c.sheet &&
          std::abs(u.s - c.s) <= tol::root_dedupe * (1.0 + std::max(std::abs(u.s), std::abs(c.s)))) {
        if (c.residual < u.residual) u = c;
        merged = true;
        break;
      }
    }
    if (!merged) unique.push_back(c);
  }

  std::vector<NullRoot> roots;
  roots.reserve(unique.size());
  for (const Candidate& c : unique) {
    NullRoot root;
    root.s = c.s;
    root.sheet = c.sheet;
    root.residual = c.residual;
    if (std::abs(c.s.imag()) > tol::complex_root_imag) {
      root.kind = RootKind::ComplexPair;
    } else {
      const Complex g = 1.0 + g2 * c.s * c.s;
      const Complex x0_src =
          r.u[0] * c.s + r.a[0] * double(c.sheet) * std::sqrt(g) + t.spin_offset[0];
      root.kind = (x[0] - x0_src.real() > 0.0) ? RootKind::Retarded : RootKind::Advanced;
    }
    roots.push_back(root);
  }
  std::sort(roots.begin(), roots.end(), [](const NullRoot& a, const NullRoot& b) {
    if (a.s.real() != b.s.real()) return a.s.real() < b.s.real();
    return a.s.imag() < b.s.imag();
  });
  return roots;
}

NullRoot retarded_root(const FourVector& x, const GaussTrajectory& t) {
  const std::vector<NullRoot> roots = null_roots(x, t);
  const NullRoot* best = nullptr;
  for (const NullRoot& r : roots) {
    if (r.sheet != +1 || r.kind != RootKind::Retarded) continue;
    if (!best || r.s.real() > best->s.real()) best = &r;  // latest emission
  }
  if (!best) throw NoRetardedRoot("retarded_root: no real retarded root on sheet +1");
  return *best;
}

CFourVector lw_potential(const FourVector& x, const GaussTrajectory& t, const NullRoot& root,
                         double q) {
  const RootGeometry g = root_geometry(x, t, root, "lw_potential");
  CFourVector a = g.v;
  return a *= q / g.d;
}

LWSplit lw_faraday_split(const FourVector& x, const GaussTrajectory& t, const NullRoot& root,
                         double q) {
  const RootGeometry g = root_geometry(x, t, root, "lw_faraday");
  const Complex d3 = g.d * g.d * g.d;
  LWSplit out;
  // F = q [ (Delta ^ a) D - (Delta ^ V)(a.Delta - V.V) ] / D^3; the V.V term
  // survives when a -> 0 and is the generalized-Coulomb part.
  out.velocity_part = wedge(g.delta, g.v, q * minkowski_dot(g.v, g.v) / d3);
  const Complex a_dot_delta = minkowski_dot(g.acc, g.delta);
  FaradayC acc = wedge(g.delta, g.acc, q * g.d / d3);
  acc += wedge(g.delta, g.v, -q * a_dot_delta / d3);
  out.acceleration_part = acc;
  return out;
}

FaradayC lw_faraday(const FourVector& x, const GaussTrajectory& t, const NullRoot& root,
                    double q) {
  LWSplit s = lw_faraday_split(x, t, root, q);
  return s.velocity_part + s.acceleration_part;
}

LWField lw_field(const FourVector& x, const GaussTrajectory& t, const NullRoot& root, double q) {
  return LWField{lw_potential(x, t, root, q), lw_faraday(x, t, root, q)};
}

CFourVector displaced_retarded_potential(const FourVector& x, const CurrentGrid& grid,
                                         const CFourVector& offset) {
  const double cell = grid.spacing[0] * grid.spacing[1] * grid.spacing[2];
  CFourVector a;
  for (int iz = 0; iz < grid.counts[2]; ++iz)
    for (int iy = 0; iy < grid.counts[1]; ++iy)
      for (int ix = 0; ix < grid.counts[0]; ++ix) {
        const FourVector& j = grid.j[grid.index(ix, iy, iz)];
        if (j[0] == 0.0 && j[1] == 0.0 && j[2] == 0.0 && j[3] == 0.0) continue;
        const Vec3 xp = grid.cell_center(ix, iy, iz);
        Complex r2 = 0.0;
        for (int i = 0; i < 3; ++i) {
          const Complex d = Complex(x[i + 1] - xp[i]) - offset[i + 1];
          r2 += d * d;
        }
        if (std::abs(r2) < tol::ring_proximity)
          throw BranchAmbiguity("displaced_retarded_potential: grid cell on the ring");
        const Complex root = std::sqrt(r2);
        Complex profile = 1.0;
        if (grid.time_profile) {
          const Complex t_r = Complex(x[0]) - offset[0] - root;
          profile = grid.time_profile(t_r);
        }
        const Complex w = profile * cell / root;
        for (int mu = 0; mu < 4; ++mu) a[mu] += j[mu] * w;
      }
  return a;
}

}  // namespace bohmlw
