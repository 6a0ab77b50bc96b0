/// \file constants.hpp
/// CODATA values used by the SI-electron units preset. All module math runs
/// in c = 1 internal units (length in Angstrom, mass in electron masses);
/// only the CLI layer converts.
#pragma once

namespace bohmlw::constants {

inline constexpr double hbar_si = 1.054571817e-34;            // J s
inline constexpr double electron_mass_si = 9.1093837015e-31;  // kg
inline constexpr double c_si = 299792458.0;                   // m / s
inline constexpr double angstrom_si = 1e-10;                  // m

/// hbar / (m_e c), the reduced Compton wavelength, in meters.
inline constexpr double reduced_compton_si = hbar_si / (electron_mass_si * c_si);

/// hbar in internal units (Angstrom, electron mass, c = 1).
inline constexpr double hbar_internal_electron = reduced_compton_si / angstrom_si;

/// Internal time unit in seconds (Angstrom / c).
inline constexpr double time_unit_seconds = angstrom_si / c_si;

}  // namespace bohmlw::constants
