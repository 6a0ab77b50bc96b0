#include "bohmlw/verification.hpp"

#include <cmath>
#include <sstream>

#include "bohmlw/constants.hpp"
#include "bohmlw/csv.hpp"
#include "bohmlw/ensemble.hpp"
#include "bohmlw/gan.hpp"
#include "bohmlw/kerr_newman.hpp"
#include "bohmlw/polynomial.hpp"
#include "bohmlw/rng.hpp"
#include "bohmlw/sqrt_tracking.hpp"

namespace bohmlw {

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

constexpr double pi = 3.14159265358979323846;

double urand(std::uint64_t seed, std::uint64_t stream, std::uint64_t i, double lo, double hi) {
  return lo + (hi - lo) * uniform01(seed, stream, i);
}

double frobenius(const Mat4& m) {
  double s = 0.0;
  for (double v : m.m) s += v * v;
  return std::sqrt(s);
}

std::string fmt(double v) { return format_double(v); }

// ---------------------------------------------------------------- criterion 1

CriterionResult electron_scale_constants() {
  CriterionResult r{1, "electron-scale constants", false, ""};
  PacketParams p;
  p.u = FourVector{{1, 0, 0, 0}};
  p.sigma_initial = {1.0, 1.0, 1.0, 1.0};  // 1 Angstrom
  p.mass = 1.0;                            // electron mass
  p.hbar = constants::hbar_internal_electron;

  const double gamma_internal = p.gamma(0);
  const double gamma_si = gamma_internal / constants::time_unit_seconds;
  const double gamma_quoted = 5.78e15;
  const double gamma_rel = std::abs(gamma_si - gamma_quoted) / gamma_quoted;

  // |X_B(0)| Gamma for a 1 Angstrom displacement, in units of c. The quoted
  // 0.0019 carries two significant figures, so agreement is checked at the
  // quote's own resolution (half an ulp of the last printed digit).
  const double kick = 1.0 * gamma_internal;
  const double kick_quoted = 0.0019;
  const bool kick_ok = std::abs(kick - kick_quoted) <= 0.5e-4;

  r.passed = (gamma_rel <= 0.005) && kick_ok;
  r.details = "Gamma = " + fmt(gamma_si) + " 1/s (quoted 5.78e15, rel " + fmt(gamma_rel) +
              "), |X(0)|Gamma = " + fmt(kick) + " c (quoted 0.0019)";
  return r;
}

// ---------------------------------------------------------------- criterion 2

CriterionResult momentum_averaging() {
  CriterionResult r{2, "pair momentum averaging", false, ""};
  const std::uint64_t seed = 0x60d1;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    PacketParams p;
    p.u = FourVector{{urand(seed, 0, i, 0.5, 2.0), urand(seed, 1, i, -1.0, 1.0),
                      urand(seed, 2, i, -1.0, 1.0), urand(seed, 3, i, -1.0, 1.0)}};
    for (int mu = 0; mu < 4; ++mu) p.sigma_initial[mu] = urand(seed, 4 + mu, i, 0.5, 2.0);
    p.mass = urand(seed, 8, i, 0.5, 2.0);
    p.hbar = urand(seed, 9, i, 0.5, 2.0);
    GaussTrajectory t{p, CFourVector{}, CFourVector{}};
    for (int mu = 0; mu < 4; ++mu)
      t.amplitude[mu] = Complex(urand(seed, 10 + mu, i, -2.0, 2.0),
                                i % 5 == 0 ? urand(seed, 14 + mu, i, -1.0, 1.0) : 0.0);
    const double s = urand(seed, 18, i, -10.0, 10.0);

    const CFourVector avg = pair_momentum_avg(t, s);
    double err = 0.0, scale = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      err = std::max(err, std::abs(avg[mu] - Complex(p.mass * p.u[mu])));
      scale = std::max(scale, std::abs(p.mass * p.u[mu]));
    }
    worst = std::max(worst, err / std::max(1.0, scale));
  }
  r.passed = worst <= 1e-13;
  r.details = "max relative deviation from M u over 1000 draws = " + fmt(worst);
  return r;
}

// ---------------------------------------------------------------- criterion 3

CriterionResult angular_momentum_cancellation() {
  CriterionResult r{3, "equal-Gamma angular momentum cancellation", false, ""};
  const std::uint64_t seed = 0xa4a4;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    PacketParams p;
    p.u = FourVector{{urand(seed, 0, i, 0.5, 2.0), urand(seed, 1, i, -1.0, 1.0),
                      urand(seed, 2, i, -1.0, 1.0), urand(seed, 3, i, -1.0, 1.0)}};
    const double sigma = urand(seed, 4, i, 0.5, 2.0);
    p.sigma_initial = {sigma, sigma, sigma, sigma};
    p.mass = urand(seed, 5, i, 0.5, 2.0);
    p.hbar = urand(seed, 6, i, 0.5, 2.0);
    GaussTrajectory t{p, CFourVector{}, CFourVector{}};
    for (int mu = 0; mu < 4; ++mu) t.amplitude[mu] = urand(seed, 7 + mu, i, -2.0, 2.0);
    const double s = urand(seed, 11, i, -5.0, 5.0);
    worst = std::max(worst, max_abs(pair_angular_momentum_avg(t, s)));
  }
  r.passed = worst <= 1e-12;
  r.details = "max |pair-averaged X^V| over 1000 equal-Gamma draws = " + fmt(worst);
  return r;
}

// ---------------------------------------------------------------- criterion 4

CriterionResult gan_sqrt_lemma() {
  CriterionResult r{4, "GAN sqrt lemma and monodromy", false, ""};
  const std::uint64_t seed = 0x5c;

  // Monodromy: a loop around the branch point flips the sheet; a loop that
  // misses it does not.
  auto circle = [](Complex center, double radius, int n) {
    std::vector<Complex> path;
    path.reserve(std::size_t(n) + 1);
    for (int i = 0; i <= n; ++i) {
      const double a = 2.0 * pi * i / n;
      path.push_back(center + radius * Complex(std::cos(a), std::sin(a)));
    }
    return path;
  };
  const std::array<Complex, 1> origin{Complex(0.0, 0.0)};
  auto ident = [](Complex z) { return z; };
  const SqrtTrack around = track_sqrt(ident, circle(Complex(0.5, 0.0), 1.0, 256), origin);
  const SqrtTrack away = track_sqrt(ident, circle(Complex(3.0, 0.0), 1.0, 256), origin);
  const bool monodromy_ok = (around.parity == 1) && (away.parity == 0);

  double worst = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Complex p1(urand(seed, 0, i, -2.0, 2.0), urand(seed, 1, i, -2.0, 2.0));
    const GanWeights w = GanWeights::make({p1, Complex(1.0) - p1});
    const Complex z(urand(seed, 2, i, -3.0, 3.0), urand(seed, 3, i, -3.0, 3.0));
    if (std::abs(z) < 0.1) continue;
    const SheetedValue sheets = sqrt_sheets(z);
    const Complex expect = (w.p[0] - w.p[1]) * std::sqrt(z);
    worst = std::max(worst, std::abs(combine(w, sheets) - expect) / std::abs(std::sqrt(z)));
  }
  r.passed = monodromy_ok && worst <= 1e-12;
  r.details = std::string("monodromy parity (around, away) = (") + std::to_string(around.parity) +
              ", " + std::to_string(away.parity) + "), max |combine - (P1-P2) sqrt z| rel = " +
              fmt(worst);
  return r;
}

// ---------------------------------------------------------------- criterion 5

CriterionResult null_root_correctness() {
  CriterionResult r{5, "null-root correctness", false, ""};
  const std::uint64_t seed = 0xf00d;

  // Static limit: s = t -/+ r exactly.
  PacketParams rest;
  rest.u = FourVector{{1, 0, 0, 0}};
  rest.sigma_initial = {1, 1, 1, 1};
  GaussTrajectory coulomb{rest, CFourVector{}, CFourVector{}};
  const FourVector x_static{{5.0, 3.0, 0.0, 0.0}};
  double static_err = HUGE_VAL;
  const std::vector<NullRoot> sr = null_roots(x_static, coulomb);
  if (sr.size() == 2) {
    static_err = std::max(std::abs(sr[0].s - Complex(2.0)), std::abs(sr[1].s - Complex(8.0)));
    if (sr[0].kind != RootKind::Retarded || sr[1].kind != RootKind::Advanced) static_err = HUGE_VAL;
  }

  // Random timelike configurations: residuals and contour count.
  double worst_resid = 0.0;
  int count_mismatch = 0;
  int configs = 0;
  for (std::uint64_t i = 0; configs < 50 && i < 200; ++i) {
    PacketParams p;
    const double vx = urand(seed, 0, i, -0.6, 0.6), vy = urand(seed, 1, i, -0.6, 0.6),
                 vz = urand(seed, 2, i, -0.6, 0.6);
    const double gamma_l = 1.0 / std::sqrt(1.0 - vx * vx - vy * vy - vz * vz);
    p.u = FourVector{{gamma_l, gamma_l * vx, gamma_l * vy, gamma_l * vz}};
    const double sigma = urand(seed, 3, i, 0.7, 1.5);
    p.sigma_initial = {sigma, sigma, sigma, sigma};
    p.mass = 1.0;
    p.hbar = urand(seed, 4, i, 0.2, 2.0);
    GaussTrajectory t{p, CFourVector{}, CFourVector{}};
    // Moderate amplitudes keep both sheets timelike (quantum kick < ~0.45c).
    const double kick = 0.45 / p.gamma(0);
    for (int mu = 0; mu < 4; ++mu)
      t.amplitude[mu] = urand(seed, 5 + mu, i, -kick / 2.0, kick / 2.0);
    if (!timelike_member(p, real_part(t.amplitude))) continue;
    const FourVector x{{urand(seed, 9, i, -8.0, 8.0), urand(seed, 10, i, -8.0, 8.0),
                        urand(seed, 11, i, -8.0, 8.0), urand(seed, 12, i, -8.0, 8.0)}};

    NullRootDiagnostics diag;
    const std::vector<NullRoot> roots = null_roots(x, t, &diag);
    const double scale = lw_scale(x, t);
    double max_s = 0.0;
    for (const NullRoot& root : roots) {
      worst_resid = std::max(worst_resid, root.residual / (scale * scale));
      max_s = std::max(max_s, std::abs(root.s));
    }

    // Rebuild the quartic to count its zeros by the argument principle.
    const CFourVector uc(p.u), a = t.amplitude, y(x);
    const Complex yy = minkowski_dot(y, y), yu = minkowski_dot(y, uc), ya = minkowski_dot(y, a),
                  uu = minkowski_dot(uc, uc), ua = minkowski_dot(uc, a),
                  aa = minkowski_dot(a, a);
    const double g2 = p.gamma(0) * p.gamma(0);
    const Complex p0 = yy + aa, p1 = -2.0 * yu, p2 = uu + aa * g2;
    const std::array<Complex, 5> coeffs{
        p0 * p0 - 4.0 * ya * ya, 2.0 * p0 * p1 + 8.0 * ya * ua,
        p1 * p1 + 2.0 * p0 * p2 - 4.0 * ua * ua - 4.0 * ya * ya * g2,
        2.0 * p1 * p2 + 8.0 * ya * ua * g2, p2 * p2 - 4.0 * ua * ua * g2};
    const int counted = argument_principle_count(coeffs, Complex(0.0), 1.5 * max_s + 2.0);
    if (counted != int(roots.size()) || counted != diag.quartic_degree) ++count_mismatch;
    ++configs;
  }

  r.passed = (static_err <= 1e-12) && (worst_resid <= tol::root_residual) &&
             (count_mismatch == 0) && (configs == 50);
  r.details = "static |s - (t -/+ r)| = " + fmt(static_err) +
              ", max residual/scale^2 = " + fmt(worst_resid) + ", contour-count mismatches " +
              std::to_string(count_mismatch) + "/" + std::to_string(configs);
  return r;
}

// ---------------------------------------------------------------- criterion 6

// Textbook uniformly-moving-charge field from the present position.
Mat4 boosted_coulomb_field(const FourVector& x, const FourVector& u, double q) {
  const Vec3 beta{u[1] / u[0], u[2] / u[0], u[3] / u[0]};
  const double b2 = beta[0] * beta[0] + beta[1] * beta[1] + beta[2] * beta[2];
  Vec3 rr{x[1] - beta[0] * x[0], x[2] - beta[1] * x[0], x[3] - beta[2] * x[0]};
  const double rn = std::sqrt(rr[0] * rr[0] + rr[1] * rr[1] + rr[2] * rr[2]);
  const double rb = rr[0] * beta[0] + rr[1] * beta[1] + rr[2] * beta[2];
  const double sin2 = b2 > 0.0 ? std::max(0.0, 1.0 - (rb * rb) / (rn * rn * b2)) : 0.0;
  const double denom = std::pow(1.0 - b2 * sin2, 1.5) * rn * rn * rn;
  Vec3 e, b;
  for (int i = 0; i < 3; ++i) e[i] = q * (1.0 - b2) * rr[i] / denom;
  b[0] = beta[1] * e[2] - beta[2] * e[1];
  b[1] = beta[2] * e[0] - beta[0] * e[2];
  b[2] = beta[0] * e[1] - beta[1] * e[0];
  return faraday_from_fields(e, b);
}

CriterionResult coulomb_limits(int threads) {
  CriterionResult r{6, "Coulomb and uniform-motion limits", false, ""};

  PacketParams rest;
  rest.u = FourVector{{1, 0, 0, 0}};
  rest.sigma_initial = {1, 1, 1, 1};
  GaussTrajectory coulomb{rest, CFourVector{}, CFourVector{}};

  double static_err = 0.0;
  for (double rr : {2.0, 5.0, 17.0}) {
    const FourVector x{{9.0, 0.0, 0.0, rr}};
    const NullRoot root = retarded_root(x, coulomb);
    const CFourVector a4 = lw_potential(x, coulomb, root, 1.0);
    const Mat4 f = physical_field(lw_faraday(x, coulomb, root, 1.0));
    static_err = std::max(static_err, std::abs(a4[0].real() - 1.0 / rr) * rr);
    static_err = std::max(static_err, std::abs(f(3, 0) - 1.0 / (rr * rr)) * rr * rr);
    Mat4 expect = faraday_from_fields(Vec3{0, 0, 1.0 / (rr * rr)}, Vec3{});
    Mat4 diff = f;
    for (int i = 0; i < 16; ++i) diff.m[i] -= expect.m[i];
    static_err = std::max(static_err, frobenius(diff) / frobenius(expect));
  }

  PacketParams moving = rest;
  const double v = 0.6, gl = 1.0 / std::sqrt(1.0 - v * v);
  moving.u = FourVector{{gl, gl * v, 0, 0}};
  GaussTrajectory boosted{moving, CFourVector{}, CFourVector{}};
  double boost_err = 0.0;
  for (const FourVector& x : {FourVector{{4.0, 1.0, 2.0, 0.5}}, FourVector{{7.0, 6.0, -3.0, 1.0}},
                              FourVector{{-2.0, 0.3, 0.4, -2.5}}}) {
    const NullRoot root = retarded_root(x, boosted);
    const Mat4 f = physical_field(lw_faraday(x, boosted, root, 1.0));
    const Mat4 expect = boosted_coulomb_field(x, moving.u, 1.0);
    Mat4 diff = f;
    for (int i = 0; i < 16; ++i) diff.m[i] -= expect.m[i];
    boost_err = std::max(boost_err, frobenius(diff) / frobenius(expect));
  }

  // Uniform motion radiates nothing: flux through spheres falls like 1/R^2.
  PacketParams drift = rest;
  const double vd = 0.2, gd = 1.0 / std::sqrt(1.0 - vd * vd);
  drift.u = FourVector{{gd, gd * vd, 0, 0}};
  EnsembleSpec spec;
  spec.packet = drift;
  spec.weighting = Weighting::EqualPair;
  spec.pair_amplitude = FourVector{};  // both members coincide, A = 0
  std::vector<double> radii;
  for (int i = 0; i < 8; ++i) radii.push_back(50.0 * std::pow(10.0, i / 7.0));
  const std::vector<PowerPoint> power = radiated_power(spec, radii, 6, threads);
  std::vector<double> pr, pv;
  for (const PowerPoint& pp : power) {
    pr.push_back(pp.radius);
    pv.push_back(pp.power);
  }
  const double slope = fit_loglog_slope(pr, pv);

  r.passed = (static_err <= 1e-12) && (boost_err <= 1e-9) && (std::abs(slope + 2.0) <= 0.1);
  r.details = "Coulomb rel err = " + fmt(static_err) + ", boosted-Coulomb rel err = " +
              fmt(boost_err) + ", uniform-motion power slope = " + fmt(slope);
  return r;
}

// ---------------------------------------------------------------- criterion 7

CriterionResult two_sheet_cancellation(int threads) {
  CriterionResult r{7, "two-sheet radiation cancellation", false, ""};

  // Non-relativistic parameters: |u| = 0.01, sigma Gamma = 0.01.
  PacketParams p;
  const double sigma = 50.0;
  p.sigma_initial = {sigma, sigma, sigma, sigma};
  p.mass = 1.0;
  p.hbar = 1.0;  // Gamma = 1 / (2 sigma^2) = 2e-4, sigma Gamma = 0.01
  const double vu = 0.01;
  p.u = FourVector{{std::sqrt(1.0 + vu * vu), vu, 0.0, 0.0}};

  const FourVector amp{{0.0, sigma, 0.0, 0.0}};
  GaussTrajectory plus{p, CFourVector(amp), CFourVector{}};

  EnsembleSpec pair;
  pair.packet = p;
  pair.weighting = Weighting::EqualPair;
  pair.pair_amplitude = amp;

  const SphereRule dirs = sphere_rule(2);  // 8 off-axis directions
  std::vector<double> radii;
  for (int i = 0; i < 8; ++i)
    radii.push_back(20.0 * sigma * std::pow(10.0, i / 7.0));  // 20 sigma .. 200 sigma

  std::vector<double> base_norm(radii.size(), 0.0), pair_norm(radii.size(), 0.0);
  for (std::size_t ir = 0; ir < radii.size(); ++ir) {
    const double R = radii[ir];
    const double t_obs = R + 5.0 * sigma;
    for (std::size_t id = 0; id < dirs.directions.size(); ++id) {
      const auto& n = dirs.directions[id];
      const FourVector x{{t_obs, R * n[0], R * n[1], R * n[2]}};
      // Radiating baseline: the acceleration (1/R) part of one sheet.
      const NullRoot root = retarded_root(x, plus);
      const LWSplit split = lw_faraday_split(x, plus, root, 1.0);
      base_norm[ir] += frobenius(physical_field(split.acceleration_part));
      // Equal-pair ensemble: full fields of both sheets, weights 1/2.
      pair_norm[ir] += frobenius(physical_field(ensemble_field(x, pair, threads)));
    }
  }

  const double slope_base = fit_loglog_slope(radii, base_norm);
  const double slope_pair = fit_loglog_slope(radii, pair_norm);
  r.passed = (std::abs(slope_base + 1.0) <= 0.1) && (std::abs(slope_pair + 2.0) <= 0.1);
  r.details = "single-sheet radiative slope = " + fmt(slope_base) +
              ", equal-pair full-field slope = " + fmt(slope_pair);
  return r;
}

// ---------------------------------------------------------------- criterion 8

CriterionResult extended_current_equivalence(int threads) {
  CriterionResult r{8, "extended-current equivalence", false, ""};

  PacketParams p;
  p.u = FourVector{{1.0, 0.05, 0.0, 0.0}};
  p.sigma_initial = {3.0, 3.0, 3.0, 3.0};  // sigma Gamma = 1/6: near on-shell
  p.mass = 1.0;
  p.hbar = 1.0;
  const double q = 1.0;

  // 20 probes inside the packet core (sampled axes within 0.8 sigma so the
  // kernel bias stays well under the Monte-Carlo budget).
  std::vector<FourVector> probes;
  const std::array<Vec3, 7> offs{Vec3{0, 0, 0},       Vec3{3.6, 0, 0},    Vec3{0, 2.4, 0},
                                 Vec3{0, 0, 2.4},     Vec3{2.7, 1.8, 0},  Vec3{0, 1.5, 1.5},
                                 Vec3{2.1, 1.2, 1.2}};
  for (double t : {-3.6, 0.0, 3.6})
    for (const Vec3& o : offs) {
      if (probes.size() >= 20) break;
      probes.push_back(FourVector{{t, o[0], o[1], o[2]}});
    }

  McCurrentOptions mc;
  mc.n = 100000;
  mc.seed = 0xbeef;
  double worst_mc = 0.0;
  for (const FourVector& x : probes) {
    const FourVector jq = quantum_current(x, p, q);
    const FourVector jm = mc_current(x, p, q, mc, threads);
    double dn = 0.0, qn = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      dn += (jm[mu] - jq[mu]) * (jm[mu] - jq[mu]);
      qn += jq[mu] * jq[mu];
    }
    worst_mc = std::max(worst_mc, std::sqrt(dn / qn));
  }
  const double mc_budget = 5.0 / std::sqrt(double(mc.n));

  // Continuity of the integrated current at random points.
  const std::uint64_t seed = 0xc0;
  double worst_cont = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    FourVector x{{urand(seed, 0, i, -4.5, 4.5), urand(seed, 1, i, -4.5, 4.5),
                  urand(seed, 2, i, -4.5, 4.5), urand(seed, 3, i, -4.5, 4.5)}};
    const double h = 6e-3;
    double div = 0.0, scale = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
      FourVector xp = x, xm = x;
      xp[mu] += h;
      xm[mu] -= h;
      const double term = (quantum_current(xp, p, q)[mu] - quantum_current(xm, p, q)[mu]) / (2 * h);
      div += term;
      scale = std::max(scale, std::abs(term));
    }
    if (scale > 1e-12) worst_cont = std::max(worst_cont, std::abs(div) / scale);
  }

  // Charge independent of the slice.
  ChargeGridSpec grid;
  grid.half_extent = {30.0, 30.0, 30.0};
  grid.points = {129, 129, 129};
  grid.time_slice = 0.0;
  const double q0 = charge_normalization(p, q, grid);
  grid.time_slice = 6.0;
  grid.center = {0.3, 0.0, 0.0};  // drifted packet
  const double q1 = charge_normalization(p, q, grid);
  const double slice_rel = std::abs(q1 - q0) / std::abs(q0);

  r.passed = (worst_mc <= mc_budget) && (worst_cont <= 1e-4) && (slice_rel <= 1e-4);
  r.details = "max MC rel dev = " + fmt(worst_mc) + " (budget " + fmt(mc_budget) +
              "), max continuity residual = " + fmt(worst_cont) + ", slice charge rel diff = " +
              fmt(slice_rel);
  return r;
}

// ---------------------------------------------------------------- criterion 9

CriterionResult kerr_newman_dipole() {
  CriterionResult r{9, "Kerr-Newman static dipole", false, ""};
  const double b = 0.5, q = 2.0;
  const CVec3 z0{Complex(0.0), Complex(0.0), Complex(0.0, b)};
  const double rr = 100.0 * b;

  const RSVector w = kn_static_field(Vec3{0.0, 0.0, rr}, z0, q);
  const double m_direct = w[2].imag() * rr * rr * rr / 2.0;
  const double rel_direct = std::abs(m_direct - q * b) / (q * b);

  // Cross-check against the displaced retarded integral of a compact blob.
  CurrentGrid grid;
  const double wblob = 0.20;
  const int n = 25;
  grid.counts = {n, n, n};
  grid.spacing = {4.0 * wblob * 2 / n, 4.0 * wblob * 2 / n, 4.0 * wblob * 2 / n};
  grid.origin = {-4.0 * wblob + grid.spacing[0] / 2, -4.0 * wblob + grid.spacing[1] / 2,
                 -4.0 * wblob + grid.spacing[2] / 2};
  grid.j.resize(std::size_t(n) * n * n);
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix) {
        const Vec3 c = grid.cell_center(ix, iy, iz);
        const double r2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
        const double rho =
            q * std::exp(-0.5 * r2 / (wblob * wblob)) /
            std::pow(2.0 * pi * wblob * wblob, 1.5);
        grid.j[grid.index(ix, iy, iz)] = FourVector{{rho, 0, 0, 0}};
      }
  const CFourVector offset(Complex(0.0), Complex(0.0), Complex(0.0), Complex(0.0, b));
  const double dz = 0.5;
  const CFourVector ap = displaced_retarded_potential(FourVector{{0, 0, 0, rr + dz}}, grid, offset);
  const CFourVector am = displaced_retarded_potential(FourVector{{0, 0, 0, rr - dz}}, grid, offset);
  const double bz = -(ap[0].imag() - am[0].imag()) / (2.0 * dz);
  const double m_blob = bz * rr * rr * rr / 2.0;
  const double rel_blob = std::abs(m_blob - q * b) / (q * b);

  r.passed = (rel_direct <= 0.01) && (rel_blob <= 0.02);
  r.details = "direct dipole moment rel err = " + fmt(rel_direct) +
              ", displaced-integral rel err = " + fmt(rel_blob);
  return r;
}

// --------------------------------------------------------------- criterion 10

CriterionResult spectral_indicator() {
  CriterionResult r{10, "spectral non-radiation indicator", false, ""};
  PacketParams p;
  p.u = FourVector{{1, 0, 0, 0}};
  p.sigma_initial = {7.0, 7.0, 7.0, 7.0};
  p.mass = 1.0;
  p.hbar = 1.0;
  const SpectralResult res = spectral_radiation_check(p, 1.0);

  const bool null_ok = res.max_null <= 10.0 * res.floor;
  const bool spacelike_ok = res.min_spacelike >= 100.0 * res.floor;
  const bool refine_ok = res.max_null_refined <= res.max_null + res.floor;
  r.passed = null_ok && spacelike_ok && refine_ok;
  r.details = "max null |J~| = " + fmt(res.max_null) + " (refined " + fmt(res.max_null_refined) +
              "), floor = " + fmt(res.floor) + ", min spacelike = " + fmt(res.min_spacelike) +
              ", DC = " + fmt(res.dc);
  return r;
}

// --------------------------------------------------------------- criterion 11

std::string determinism_fingerprint(int threads) {
  std::ostringstream os;

  EnsembleSpec spec;
  spec.packet.u = FourVector{{1.0, 0.05, 0.0, 0.0}};
  spec.packet.sigma_initial = {1, 1, 1, 1};
  spec.n = 64;
  spec.seed = 7;
  for (const FourVector& x : {FourVector{{12.0, 3.0, 4.0, 5.0}}, FourVector{{30.0, -11.0, 2.0, 7.0}}}) {
    const FaradayC f = ensemble_field(x, spec, threads);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        os << format_double(f(i, j).real()) << "," << format_double(f(i, j).imag()) << "\n";
  }

  McCurrentOptions mc;
  mc.n = 20000;
  mc.seed = 3;
  const FourVector jm = mc_current(FourVector{{0.5, 0.3, 0.2, 0.1}}, spec.packet, 1.0, mc, threads);
  for (int mu = 0; mu < 4; ++mu) os << format_double(jm[mu]) << "\n";

  const std::vector<double> radii{30.0, 60.0};
  for (const PowerPoint& pp : radiated_power(spec, radii, 4, threads))
    os << format_double(pp.power) << "\n";
  return os.str();
}

CriterionResult determinism(int threads) {
  CriterionResult r{11, "thread-count determinism", false, ""};
  const std::string one = determinism_fingerprint(1);
  const std::string many = determinism_fingerprint(threads > 1 ? threads : 4);
  const std::string again = determinism_fingerprint(threads > 1 ? threads : 4);
  r.passed = (one == many) && (many == again);
  r.details = r.passed ? "reports byte-identical across thread counts"
                       : "reports differ across thread counts";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const VerifyOptions& opts) {
  std::vector<CriterionResult> out;
  out.push_back(electron_scale_constants());
  out.push_back(momentum_averaging());
  out.push_back(angular_momentum_cancellation());
  out.push_back(gan_sqrt_lemma());
  out.push_back(null_root_correctness());
  out.push_back(coulomb_limits(opts.threads));
  out.push_back(two_sheet_cancellation(opts.threads));
  out.push_back(extended_current_equivalence(opts.threads));
  out.push_back(kerr_newman_dipole());
  out.push_back(spectral_indicator());
  out.push_back(determinism(opts.threads));
  return out;
}

std::string format_report(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const CriterionResult& r : results)
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.number << ". " << r.name << " -- " << r.details
       << "\n";
  return os.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace bohmlw
