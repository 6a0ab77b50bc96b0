#include <doctest.h>

#include <cmath>

#include "bohmlw/config.hpp"
#include "bohmlw/constants.hpp"

using namespace bohmlw;

TEST_SUITE("fast") {

TEST_CASE("example config parses and round trips into an ensemble spec") {
  const ScenarioConfig cfg = parse_config_text(example_config_text());
  CHECK(cfg.units == UnitsPreset::Dimensionless);
  CHECK(cfg.packet.mass == 1.0);
  CHECK(cfg.ensemble_n == 1000);
  CHECK(cfg.seed == 42);
  CHECK(cfg.radii.size() == 4);
  const EnsembleSpec spec = cfg.ensemble_spec();
  CHECK(spec.charge == cfg.charge);
  CHECK(spec.n == cfg.ensemble_n);
  spec.validate();
}

TEST_CASE("validation errors carry the field name") {
  CHECK_THROWS_WITH_AS(parse_config_text(R"({"packet": {"sigmaI": [1, -1, 1, 1]}})"),
                       doctest::Contains("packet.sigmaI[1]"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text(R"({"units": "imperial"})"),
                       doctest::Contains("units"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text(R"({"ensemble": {"n": 0}})"),
                       doctest::Contains("ensemble.n"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text("not json"), doctest::Contains("parse"), ConfigError);
  try {
    parse_config_text(R"({"packet": {"sigmaI": [1, -1, 1, 1]}})");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "packet.sigmaI[1]");
  }
}

TEST_CASE("dimensionless preset pins the unit constants") {
  CHECK_THROWS_WITH_AS(parse_config_text(R"({"packet": {"mass": 2.0}})"),
                       doctest::Contains("packet.mass"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config_text(R"({"packet": {"hbar": 0.5}})"),
                       doctest::Contains("packet.hbar"), ConfigError);
  const ScenarioConfig ok = parse_config_text(R"({"packet": {"mass": 1.0, "hbar": 1.0}})");
  CHECK(ok.packet.mass == 1.0);
  CHECK(ok.packet.hbar == 1.0);
}

TEST_CASE("si-electron preset fixes hbar and mass") {
  const ScenarioConfig cfg = parse_config_text(
      R"({"units": "si-electron", "packet": {"u": [1,0,0,0], "sigmaI": [1,1,1,1]}})");
  CHECK(cfg.packet.mass == 1.0);
  CHECK(cfg.packet.hbar == constants::hbar_internal_electron);
  // Gamma in SI units reproduces the electron-scale spreading rate.
  const double gamma_si = cfg.packet.gamma(0) / cfg.time_unit_seconds();
  CHECK(gamma_si == doctest::Approx(5.78e15).epsilon(5e-3));

  CHECK_THROWS_WITH_AS(
      parse_config_text(R"({"units": "si-electron", "packet": {"mass": 2.0}})"),
      doctest::Contains("si-electron"), ConfigError);
}

}  // TEST_SUITE
