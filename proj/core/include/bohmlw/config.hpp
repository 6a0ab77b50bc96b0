/// \file config.hpp
/// Scenario configuration for the CLI: JSON schema, validation with field
/// names in every error, and the two units presets.
#pragma once

#include <array>
#include <optional>
#include <string>

#include "bohmlw/ensemble.hpp"

namespace bohmlw {

enum class UnitsPreset { Dimensionless, SIElectron };

enum class OutputFormat { Csv, Json };

struct GridSpec {
  FourVector origin{};                       // grid corner (t, x, y, z)
  std::array<double, 4> extents{0, 8, 8, 8};  // edge lengths per axis
  std::array<int, 4> counts{1, 9, 9, 9};      // samples per axis
};

struct ScenarioConfig {
  UnitsPreset units = UnitsPreset::Dimensionless;
  PacketParams packet;         // internal units (SI preset already converted)
  double charge = 1.0;
  std::int64_t ensemble_n = 1000;
  std::uint64_t seed = 0;
  Weighting weighting = Weighting::Bohm;
  bool timelike_filter = false;
  FourVector pair_amplitude{};
  GridSpec grid;
  std::vector<double> radii{20.0, 40.0, 80.0};
  OutputFormat format = OutputFormat::Csv;
  std::string output_path = "-";  // "-" = stdout

  /// Seconds per internal time unit (1 for the dimensionless preset).
  double time_unit_seconds() const;

  EnsembleSpec ensemble_spec() const;
};

/// Parse and validate a JSON config file. Throws ConfigError naming the
/// offending field.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text);

/// An example configuration (dimensionless preset) as JSON text.
std::string example_config_text();

}  // namespace bohmlw
