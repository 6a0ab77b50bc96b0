#include "bohmlw/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bohmlw/constants.hpp"

namespace bohmlw {

using nlohmann::json;

double ScenarioConfig::time_unit_seconds() const {
  return units == UnitsPreset::SIElectron ? constants::time_unit_seconds : 1.0;
}

EnsembleSpec ScenarioConfig::ensemble_spec() const {
  EnsembleSpec spec;
  spec.packet = packet;
  spec.n = ensemble_n;
  spec.seed = seed;
  spec.weighting = weighting;
  spec.timelike_filter = timelike_filter;
  spec.charge = charge;
  spec.pair_amplitude = pair_amplitude;
  return spec;
}

namespace {

double get_number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  return j.get<double>();
}

FourVector get_vec4(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 4) throw ConfigError(field, "expected an array of 4 numbers");
  FourVector v;
  for (int i = 0; i < 4; ++i) v[i] = get_number(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

ScenarioConfig parse(const json& j) {
  ScenarioConfig cfg;

  if (j.contains("units")) {
    const std::string u = j["units"].is_string() ? j["units"].get<std::string>() : "";
    if (u == "dimensionless")
      cfg.units = UnitsPreset::Dimensionless;
    else if (u == "si-electron")
      cfg.units = UnitsPreset::SIElectron;
    else
      throw ConfigError("units", "expected \"dimensionless\" or \"si-electron\"");
  }

  if (j.contains("packet")) {
    const json& p = j["packet"];
    if (!p.is_object()) throw ConfigError("packet", "expected an object");
    if (p.contains("u")) cfg.packet.u = get_vec4(p["u"], "packet.u");
    if (p.contains("sigmaI")) {
      const FourVector s = get_vec4(p["sigmaI"], "packet.sigmaI");
      for (int i = 0; i < 4; ++i) {
        if (!(s[i] > 0.0))
          throw ConfigError("packet.sigmaI[" + std::to_string(i) + "]", "must be > 0");
        cfg.packet.sigma_initial[i] = s[i];
      }
    }
    if (cfg.units == UnitsPreset::SIElectron) {
      // Lengths are Angstroms, masses electron masses, c = 1; the only free
      // constant is hbar in these units. Mass/hbar keys are rejected so the
      // preset stays consistent.
      if (p.contains("mass") || p.contains("hbar"))
        throw ConfigError("packet", "mass/hbar are fixed by the si-electron preset");
      cfg.packet.mass = 1.0;
      cfg.packet.hbar = constants::hbar_internal_electron;
    } else {
      // The dimensionless preset pins M = hbar = 1; every remaining scale is
      // carried by sigmaI and u.
      if (p.contains("mass") && get_number(p["mass"], "packet.mass") != 1.0)
        throw ConfigError("packet.mass", "the dimensionless preset fixes mass = 1");
      if (p.contains("hbar") && get_number(p["hbar"], "packet.hbar") != 1.0)
        throw ConfigError("packet.hbar", "the dimensionless preset fixes hbar = 1");
      cfg.packet.mass = 1.0;
      cfg.packet.hbar = 1.0;
    }
  } else if (cfg.units == UnitsPreset::SIElectron) {
    cfg.packet.mass = 1.0;
    cfg.packet.hbar = constants::hbar_internal_electron;
  }

  if (j.contains("charge")) cfg.charge = get_number(j["charge"], "charge");

  if (j.contains("ensemble")) {
    const json& e = j["ensemble"];
    if (!e.is_object()) throw ConfigError("ensemble", "expected an object");
    if (e.contains("n")) {
      if (!e["n"].is_number_integer() || e["n"].get<std::int64_t>() < 1)
        throw ConfigError("ensemble.n", "expected an integer >= 1");
      cfg.ensemble_n = e["n"].get<std::int64_t>();
    }
    if (e.contains("seed")) {
      if (!e["seed"].is_number_integer()) throw ConfigError("ensemble.seed", "expected an integer");
      cfg.seed = e["seed"].get<std::uint64_t>();
    }
    if (e.contains("weighting")) {
      const std::string w = e["weighting"].is_string() ? e["weighting"].get<std::string>() : "";
      if (w == "bohm")
        cfg.weighting = Weighting::Bohm;
      else if (w == "equal-pair")
        cfg.weighting = Weighting::EqualPair;
      else
        throw ConfigError("ensemble.weighting", "expected \"bohm\" or \"equal-pair\"");
    }
    if (e.contains("timelike_filter")) {
      if (!e["timelike_filter"].is_boolean())
        throw ConfigError("ensemble.timelike_filter", "expected a boolean");
      cfg.timelike_filter = e["timelike_filter"].get<bool>();
    }
    if (e.contains("pair_amplitude"))
      cfg.pair_amplitude = get_vec4(e["pair_amplitude"], "ensemble.pair_amplitude");
  }

  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (!g.is_object()) throw ConfigError("grid", "expected an object");
    if (g.contains("origin")) cfg.grid.origin = get_vec4(g["origin"], "grid.origin");
    if (g.contains("extents")) {
      const FourVector e = get_vec4(g["extents"], "grid.extents");
      for (int i = 0; i < 4; ++i) cfg.grid.extents[i] = e[i];
    }
    if (g.contains("counts")) {
      if (!g["counts"].is_array() || g["counts"].size() != 4)
        throw ConfigError("grid.counts", "expected an array of 4 integers");
      for (int i = 0; i < 4; ++i) {
        if (!g["counts"][i].is_number_integer() || g["counts"][i].get<int>() < 1)
          throw ConfigError("grid.counts[" + std::to_string(i) + "]", "expected an integer >= 1");
        cfg.grid.counts[i] = g["counts"][i].get<int>();
      }
    }
  }

  if (j.contains("radii")) {
    if (!j["radii"].is_array() || j["radii"].empty())
      throw ConfigError("radii", "expected a non-empty array of numbers");
    cfg.radii.clear();
    for (std::size_t i = 0; i < j["radii"].size(); ++i) {
      const double r = get_number(j["radii"][i], "radii[" + std::to_string(i) + "]");
      if (!(r > 0.0)) throw ConfigError("radii[" + std::to_string(i) + "]", "must be > 0");
      cfg.radii.push_back(r);
    }
  }

  if (j.contains("output")) {
    const json& o = j["output"];
    if (!o.is_object()) throw ConfigError("output", "expected an object");
    if (o.contains("format")) {
      const std::string f = o["format"].is_string() ? o["format"].get<std::string>() : "";
      if (f == "csv")
        cfg.format = OutputFormat::Csv;
      else if (f == "json")
        cfg.format = OutputFormat::Json;
      else
        throw ConfigError("output.format", "expected \"csv\" or \"json\"");
    }
    if (o.contains("path")) {
      if (!o["path"].is_string()) throw ConfigError("output.path", "expected a string");
      cfg.output_path = o["path"].get<std::string>();
    }
  }

  cfg.packet.validate();
  return cfg;
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("(file)", std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("(file)", "top level must be an object");
  return parse(j);
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("(file)", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string example_config_text() {
  return R"({
  "units": "dimensionless",
  "packet": {
    "u": [1.0, 0.0, 0.0, 0.0],
    "sigmaI": [1.0, 1.0, 1.0, 1.0],
    "mass": 1.0,
    "hbar": 1.0
  },
  "charge": 1.0,
  "ensemble": {
    "n": 1000,
    "seed": 42,
    "weighting": "bohm",
    "timelike_filter": false,
    "pair_amplitude": [0.0, 1.0, 0.0, 0.0]
  },
  "grid": {
    "origin": [0.0, -4.0, -4.0, -4.0],
    "extents": [0.0, 8.0, 8.0, 8.0],
    "counts": [1, 9, 9, 9]
  },
  "radii": [20.0, 40.0, 80.0, 160.0],
  "output": { "format": "csv", "path": "-" }
})";
}

}  // namespace bohmlw
