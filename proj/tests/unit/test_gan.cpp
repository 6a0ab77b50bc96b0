#include <doctest.h>

#include <cmath>

#include "bohmlw/gan.hpp"
#include "bohmlw/sqrt_tracking.hpp"
#include "test_support.hpp"

using namespace bohmlw;
using testutil::rnd;

TEST_SUITE("fast") {

TEST_CASE("combine basics") {
  // Single sheet: entire functions are fixed points.
  const GanWeights one = GanWeights::make({Complex(1.0)});
  CHECK(combine(one, SheetedValue{{Complex(2.5, -1.0)}}) == Complex(2.5, -1.0));

  // P = (1, 0) picks the principal sheet.
  const GanWeights pick = GanWeights::make({Complex(1.0), Complex(0.0)});
  const SheetedValue sv = sqrt_sheets(Complex(9.0));
  CHECK(combine(pick, sv) == Complex(3.0));

  // (P1, P2) on the sqrt sheets gives (P1 - P2) sqrt z.
  const GanWeights w = GanWeights::make({Complex(0.75), Complex(0.25)});
  const Complex arith = combine(w, sqrt_sheets(Complex(4.0)));
  CHECK(arith.real() == doctest::Approx(1.0));
  CHECK(std::abs(arith.imag()) < 1e-15);

  CHECK_THROWS_AS(combine(one, SheetedValue{{Complex(1), Complex(2)}}), DimensionMismatch);
  CHECK_THROWS_AS(GanWeights::make({Complex(0.5), Complex(0.6)}), WeightsNotNormalized);
  CHECK_THROWS_AS(GanWeights::make({}), InvalidInput);
}

TEST_CASE("sqrt sheets") {
  const SheetedValue s1 = sqrt_sheets(Complex(1.0));
  CHECK(s1.f[0] == Complex(1.0));
  CHECK(s1.f[1] == Complex(-1.0));

  // Principal branch at z = -1: (i, -i).
  const SheetedValue sm = sqrt_sheets(Complex(-1.0));
  CHECK(std::abs(sm.f[0] - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(sm.f[1] - Complex(0, -1)) < 1e-15);

  CHECK_THROWS_AS(sqrt_sheets(Complex(0.0)), AtBranchPoint);
}

TEST_CASE("combine is linear in the weights and permutation invariant") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Complex z(rnd(61, 0, i, -3, 3), rnd(61, 1, i, -3, 3));
    if (std::abs(z) < 0.1) continue;
    const SheetedValue sv = sqrt_sheets(z);
    const Complex p1(rnd(61, 2, i, -2, 2), rnd(61, 3, i, -2, 2));
    const GanWeights w = GanWeights::make({p1, Complex(1.0) - p1});

    // Span property: solving X = P1 - P2 reproduces X sqrt(z).
    const Complex x = p1 - (Complex(1.0) - p1);
    CHECK(std::abs(combine(w, sv) - x * sv.f[0]) < 1e-12 * std::max(1.0, std::abs(sv.f[0])));

    // Permuting (weights, values) together changes nothing.
    const GanWeights wp = GanWeights::make({Complex(1.0) - p1, p1});
    const SheetedValue svp{{sv.f[1], sv.f[0]}};
    CHECK(std::abs(combine(w, sv) - combine(wp, svp)) < 1e-14 * std::max(1.0, std::abs(sv.f[0])));

    // Entire fixed point: when all sheet values agree, the combination is
    // weight independent.
    const SheetedValue flat{{Complex(1.4, 0.2), Complex(1.4, 0.2)}};
    CHECK(std::abs(combine(w, flat) - Complex(1.4, 0.2)) < 1e-13);
  }
}

TEST_CASE("sheet values swap under continuation around the branch point") {
  std::vector<Complex> loop;
  constexpr double two_pi = 2.0 * 3.14159265358979323846;
  const Complex z0(2.0, 0.5);
  for (int i = 0; i <= 128; ++i) {
    const double a = two_pi * i / 128;
    loop.push_back(z0 * Complex(std::cos(a), std::sin(a)));
  }
  const std::array<Complex, 1> origin{Complex(0.0)};
  const SqrtTrack track =
      track_sqrt([](Complex z) { return z; }, loop, origin);
  const SheetedValue sv = sqrt_sheets(z0);
  CHECK(track.parity == 1);
  CHECK(std::abs(track.value - sv.f[1]) < 1e-12);
}

TEST_CASE("nth roots and logarithms as sheeted-value fixtures") {
  // z^{1/n} has n sheets f_k = z^{1/n} w^k (w the nth root of unity); the
  // weighted combination spans X z^{1/n} with X = sum P_k w^k.
  constexpr double two_pi = 2.0 * 3.14159265358979323846;
  const int n = 5;
  const Complex z(1.7, -0.8);
  const Complex principal = std::pow(z, 1.0 / n);
  SheetedValue sheets;
  for (int k = 0; k < n; ++k)
    sheets.f.push_back(principal *
                       Complex(std::cos(two_pi * k / n), std::sin(two_pi * k / n)));
  std::vector<Complex> p(n, Complex(0.0));
  p[0] = Complex(0.2, 0.4);
  p[2] = Complex(0.3, -0.1);
  p[4] = Complex(1.0) - p[0] - p[2];
  const GanWeights w = GanWeights::make(p);
  Complex x = 0.0;
  for (int k = 0; k < n; ++k)
    x += p[std::size_t(k)] * Complex(std::cos(two_pi * k / n), std::sin(two_pi * k / n));
  CHECK(std::abs(combine(w, sheets) - x * principal) < 1e-14);

  // ln z has sheets ln z + 2 pi i k; the combination shifts by a constant
  // X = 2 pi i sum k P_k, never rescaling the function.
  SheetedValue logs;
  for (int k = -1; k <= 1; ++k)
    logs.f.push_back(std::log(z) + Complex(0, two_pi * k));
  const GanWeights wl = GanWeights::make({Complex(0.25), Complex(0.5), Complex(0.25)});
  const Complex shift = Complex(0, two_pi) * (-0.25 + 0.25);
  CHECK(std::abs(combine(wl, logs) - (std::log(z) + shift)) < 1e-14);
}

TEST_CASE("nonlinearity guard") {
  CHECK(check_nonlinearity_guard(CompositionKind::Sum, 1, 2) == CompositionRule::Allowed);
  CHECK(check_nonlinearity_guard(CompositionKind::Sum, 2, 2) == CompositionRule::Forbidden);
  CHECK(check_nonlinearity_guard(CompositionKind::Product, 1, 2) == CompositionRule::Allowed);
  CHECK(check_nonlinearity_guard(CompositionKind::Product, 3, 2) == CompositionRule::Forbidden);
}

TEST_CASE("trajectory family") {
  PacketParams p;
  p.u = FourVector{{1, 0.1, 0, 0}};
  p.sigma_initial = {1, 1, 1, 1};
  p.mass = 1.0;
  p.hbar = 2.0;
  const GaussTrajectory seed{p, CFourVector(0.5, -0.4, 0.3, 1.0), CFourVector{}};
  const TrajectoryFamily family(seed);

  // The seed itself.
  const GaussTrajectory same = family.member(real_part(seed.amplitude));
  for (double s : {-1.0, 0.3, 2.0})
    for (int mu = 0; mu < 4; ++mu)
      CHECK(position(same, s)[mu] == position(seed, s)[mu]);

  // Second sheet = negated amplitude.
  const GaussTrajectory other = family.second_sheet();
  for (int mu = 0; mu < 4; ++mu) CHECK(other.amplitude[mu] == -seed.amplitude[mu]);

  // Arbitrary real member equals a directly constructed trajectory.
  const FourVector a{{0.1, 2.0, -0.7, 0.4}};
  const GaussTrajectory member = family.member(a);
  const GaussTrajectory direct{p, CFourVector(a), CFourVector{}};
  for (int mu = 0; mu < 4; ++mu)
    CHECK(position(member, 1.3)[mu] == position(direct, 1.3)[mu]);

  // A seed with a vanishing amplitude axis cannot generate the family.
  const GaussTrajectory degenerate{p, CFourVector(0.5, 0.0, 0.3, 1.0), CFourVector{}};
  CHECK_THROWS_AS(TrajectoryFamily{degenerate}, ZeroAmplitudeAxis);
}

}  // TEST_SUITE
