/// \file tolerances.hpp
/// All numeric tolerances used across the library, collected in one record
/// so they can be audited (and, for the quadrature ones, overridden).
#pragma once

namespace bohmlw::tol {

// Algebraic / structural checks.
inline constexpr double on_shell = 1e-12;         // |u.u - 1| for proper velocities
inline constexpr double antisymmetry = 1e-12;     // max |F + F^T| relative
inline constexpr double asd_residual = 1e-13;     // |*W + iW| after make_asd
inline constexpr double rs_roundtrip = 1e-13;     // RS vector <-> Faraday round trip
inline constexpr double poynting_imag = 1e-13;    // discarded imaginary residue

// Kerr-Newman static field.
inline constexpr double ring_proximity = 1e-12;   // |(x - z0)^2| singular-ring guard

// Wavepacket.
inline constexpr double nodal_floor = 1e-300;     // |psi| underflow guard

// Trajectory / analytic continuation.
inline constexpr double branch_point = 1e-14;     // |1 + Gamma^2 s^2| at evaluation
inline constexpr double path_min_distance = 1e-10;  // path clearance to branch points
inline constexpr double step_ambiguity = 0.1;     // predictor-corrector ratio target

// GAN.
inline constexpr double weight_sum = 1e-14;       // |sum P_i - 1|

// Null roots / Lienard-Wiechert.
inline constexpr double root_residual = 1e-10;    // unrationalized residual / scale^2
inline constexpr double complex_root_imag = 1e-8; // |Im s| above which a root is complexPair
inline constexpr double quartic_deflate = 1e-14;  // leading coefficient, relative
inline constexpr double lw_denominator = 1e-12;   // |V.(x-X)| / scale caustic guard
inline constexpr double root_dedupe = 1e-9;       // duplicate root clustering, relative

// Quadrature defaults (runtime-overridable through QuadratureOptions).
inline constexpr double quad_rel = 1e-10;
inline constexpr double quad_abs = 1e-14;
inline constexpr int quad_max_depth = 48;

// Ensemble.
inline constexpr double filter_starvation = 0.5;  // max rejection fraction
inline constexpr double tail_fraction = 1e-8;     // integrand tail / peak at S_max

}  // namespace bohmlw::tol
