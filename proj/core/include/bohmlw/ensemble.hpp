/// \file ensemble.hpp
/// Bohmian-weighted ensembles over the trajectory family: amplitude sampling
/// from the initial density, weighted field superposition over retarded
/// roots, the integrated (extended) quantum current with its Monte-Carlo
/// cross-estimator, charge normalization, radiated power and the
/// forward-light-cone spectral indicator.
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bohmlw/lienard_wiechert.hpp"
#include "bohmlw/quadrature.hpp"

namespace bohmlw {

enum class Weighting { Bohm, EqualPair, Custom };

struct EnsembleSpec {
  PacketParams packet;
  std::int64_t n = 1000;         // sample count (Bohm weighting)
  std::uint64_t seed = 0;
  Weighting weighting = Weighting::Bohm;
  bool timelike_filter = false;
  double charge = 1.0;
  FourVector pair_amplitude{};   // EqualPair: the two members are +/- this
  std::vector<std::pair<FourVector, double>> custom;  // Custom: (amplitude, weight)

  void validate() const;
};

struct AmplitudeSample {
  FourVector a;
  double weight;
};

struct SampleDiagnostics {
  std::int64_t rejected = 0;  // redraws caused by the timelike filter
};

/// Draws from rho(.,0): independent Gaussians per axis with sd sigma_Imu,
/// realized as antithetic pairs (A, -A) so the two Riemann sheets enter
/// exactly. Deterministic given the seed. Throws FilterStarvation when the
/// timelike filter rejects more than half of all draws.
std::vector<AmplitudeSample> sample_amplitudes(const EnsembleSpec& spec,
                                               SampleDiagnostics* diag = nullptr);

/// Exact timelike test for a real-amplitude member: V.V as a function of
/// tau = Gamma^2 s / f is a quadratic on (-Gamma, Gamma); checks its minimum.
bool timelike_member(const PacketParams& p, const FourVector& a);

struct EnsembleFieldStats {
  std::int64_t used = 0;
  std::int64_t skipped_no_retarded = 0;
  std::int64_t skipped_caustic = 0;
};

/// Weight-summed single-root Faraday tensors over the members, each member
/// contributing its sheet +1 retarded root(s) (the second sheet arises as the
/// antithetic partner). Deterministic pairwise reduction; thread count does
/// not change the result.
FaradayC ensemble_field(const FourVector& x, const EnsembleSpec& spec, int threads = 1,
                        EnsembleFieldStats* stats = nullptr);

/// Truncation radius for the world-time quadratures: the ~1/s^4 envelope of
/// the integrand falls below tol::tail_fraction of its peak, with margin for
/// the observation time.
double current_s_max(const PacketParams& p, double x0_abs);

/// Extended quantum current J^nu(x) = q Int ds rho(x,s) V^nu(x,s) by adaptive
/// quadrature (the integrand is evaluated in closed form).
FourVector quantum_current(const FourVector& x, const PacketParams& p, double q,
                           const QuadratureOptions& opts = {});

struct CurrentSample {
  FourVector x;
  FourVector j;
};

/// quantum_current evaluated over a set of field points (parallel map,
/// output order follows the input order).
std::vector<CurrentSample> current_map(std::span<const FourVector> points, const PacketParams& p,
                                       double q, const QuadratureOptions& opts = {},
                                       int threads = 1);

struct ChargeGridSpec {
  double time_slice = 0.0;
  Vec3 center{0.0, 0.0, 0.0};
  Vec3 half_extent{8.0, 8.0, 8.0};
  std::array<int, 3> points{65, 65, 65};  // per-axis Simpson points (odd)
};

/// Q = Int d3x J^0 at fixed x^0, tensor-product Simpson over the grid (the
/// separable integrand is evaluated axis-by-axis). Throws GridTooSmall when
/// the grid spans less than 8 sigma_I on some axis.
double charge_normalization(const PacketParams& p, double q, const ChargeGridSpec& grid);

struct PowerPoint {
  double radius;
  double power;
};

/// Poynting flux of the physical ensemble field through spheres of the given
/// radii, observed at x^0 = R + 5 max(sigma_I); product quadrature with
/// n_theta polar nodes.
std::vector<PowerPoint> radiated_power(const EnsembleSpec& spec, std::span<const double> radii,
                                       int n_theta = 8, int threads = 1);

/// 2^n Riemann sheets for an n-particle product state.
std::uint64_t sheet_count(int n_particles);

struct SpectralOptions {
  int spatial_points = 160;
  double spatial_halfwidth_sigmas = 8.0;   // in units of sigma_j(T)
  int temporal_points = 320;
  double window_sigmas = 5.0;              // Gaussian window sd in units of sigma_0
  double window_support = 5.0;             // grid half-extent in units of the window sd
  std::vector<double> omega_sigma{3.0, 3.5, 4.0};  // omega in units of 1 / max sigma_I
  int s_panels = 96;
};

struct SpectralSample {
  FourVector k;
  double magnitude;  // |J~(k)| (Euclidean over the four components)
};

struct SpectralResult {
  double dc = 0.0;           // J~^0(0); equals the charge Q
  double floor = 0.0;        // quadrature + window noise floor estimate
  double max_null = 0.0;     // coarse grid
  double max_null_refined = 0.0;  // half spacing
  double min_spacelike = 0.0;
  std::vector<SpectralSample> null_k;
  std::vector<SpectralSample> spacelike_k;
};

/// Windowed 4d Fourier transform of the quantum current on a grid (evaluated
/// in factorized form, which is identical to the direct grid sum), sampled on
/// forward null directions and at spacelike comparison momenta. The temporal
/// window is a truncated Gaussian and the transform is normalized per unit
/// window mass, so the k = 0 value is the charge.
SpectralResult spectral_radiation_check(const PacketParams& p, double q,
                                        const SpectralOptions& opts = {});

struct McCurrentOptions {
  std::int64_t n = 100000;        // total samples (antithetic pairs)
  std::uint64_t seed = 1;
  double bandwidth_fraction = 0.1;  // kernel bandwidth / sigma_I on the sampled axes
  int s_panels = 48;
};

/// Monte-Carlo estimate of the trajectory-ensemble current at x: amplitudes
/// on axes 0 and 1 are integrated against the null condition in closed form,
/// axes 2 and 3 are sampled (stratified antithetic draws from rho(.,0)) and
/// binned with a Gaussian kernel of bandwidth sigma_I/10. Its expectation is
/// quantum_current smoothed over (x2, x3) by the kernel.
FourVector mc_current(const FourVector& x, const PacketParams& p, double q,
                      const McCurrentOptions& opts, int threads = 1);

}  // namespace bohmlw
