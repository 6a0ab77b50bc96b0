// Command-line front end: scenario configuration plus subcommands for
// trajectories, null roots, ensemble fields, currents, power scans, the
// spectral check and the verification suite. Exit codes: 0 success,
// 1 numerical non-convergence (or failed verification), 2 configuration
// error. Errors are mirrored as JSON on stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bohmlw/config.hpp"
#include "bohmlw/csv.hpp"
#include "bohmlw/ensemble.hpp"
#include "bohmlw/parallel.hpp"
#include "bohmlw/verification.hpp"

namespace {

using namespace bohmlw;

struct GlobalArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  int threads = default_threads();
  double tolerance_scale = 1.0;
};

ScenarioConfig resolve_config(const GlobalArgs& g) {
  ScenarioConfig cfg =
      g.config_path.empty() ? parse_config_text(example_config_text()) : load_config(g.config_path);
  if (g.seed) cfg.seed = *g.seed;
  return cfg;
}

QuadratureOptions quad_options(const GlobalArgs& g) {
  QuadratureOptions q;
  q.rel_tol *= g.tolerance_scale;
  q.abs_tol *= g.tolerance_scale;
  return q;
}

void emit(const ScenarioConfig& cfg, const Table& table) {
  std::ostringstream buf;
  if (cfg.format == OutputFormat::Csv)
    write_csv(buf, table);
  else
    write_json(buf, table);
  if (cfg.output_path == "-" || cfg.output_path.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream out(cfg.output_path);
    if (!out) throw ConfigError("output.path", "cannot open '" + cfg.output_path + "' for writing");
    out << buf.str();
  }
}

void add_packet_comments(const ScenarioConfig& cfg, Table& t) {
  const double tu = cfg.time_unit_seconds();
  std::string gammas;
  for (int mu = 0; mu < 4; ++mu)
    gammas += (mu ? "," : "") + format_double(cfg.packet.gamma(mu) / tu);
  t.add_comment("Gamma_per_second_axis0..3 = " + gammas);
  t.add_comment(std::string("units = ") +
                (cfg.units == UnitsPreset::SIElectron ? "si-electron (lengths in Angstrom)"
                                                      : "dimensionless"));
}

GaussTrajectory trajectory_from(const ScenarioConfig& cfg, const std::vector<double>& amp_re,
                                const std::vector<double>& amp_im, int sheet) {
  GaussTrajectory t;
  t.params = cfg.packet;
  FourVector re = cfg.pair_amplitude;
  if (!amp_re.empty())
    for (int i = 0; i < 4; ++i) re[i] = amp_re[std::size_t(i)];
  for (int i = 0; i < 4; ++i)
    t.amplitude[i] = Complex(re[i], amp_im.empty() ? 0.0 : amp_im[std::size_t(i)]);
  if (sheet < 0) t.amplitude = -t.amplitude;
  return t;
}

int cmd_trajectory(const GlobalArgs& g, const std::vector<double>& amp_re,
                   const std::vector<double>& amp_im, int sheet, double s_lo, double s_hi,
                   int steps) {
  const ScenarioConfig cfg = resolve_config(g);
  const GaussTrajectory t = trajectory_from(cfg, amp_re, amp_im, sheet);

  Table table;
  table.columns = {"s"};
  for (const char* base : {"X", "V"})
    for (int mu = 0; mu < 4; ++mu) {
      table.columns.push_back("Re" + std::string(base) + std::to_string(mu));
      table.columns.push_back("Im" + std::string(base) + std::to_string(mu));
    }
  add_packet_comments(cfg, table);

  for (int i = 0; i < steps; ++i) {
    const double s = steps == 1 ? s_lo : s_lo + (s_hi - s_lo) * i / (steps - 1);
    const CFourVector x = position(t, s);
    const CFourVector v = velocity(t, s);
    auto& row = table.new_row();
    row.push_back(s);
    for (int mu = 0; mu < 4; ++mu) {
      row.push_back(x[mu].real());
      row.push_back(x[mu].imag());
    }
    for (int mu = 0; mu < 4; ++mu) {
      row.push_back(v[mu].real());
      row.push_back(v[mu].imag());
    }
  }
  emit(cfg, table);
  return 0;
}

int cmd_roots(const GlobalArgs& g, const std::vector<double>& point,
              const std::vector<double>& amp_re, const std::vector<double>& amp_im) {
  const ScenarioConfig cfg = resolve_config(g);
  const GaussTrajectory t = trajectory_from(cfg, amp_re, amp_im, +1);
  const FourVector x{{point[0], point[1], point[2], point[3]}};

  Table table;
  table.columns = {"x0", "x1", "x2", "x3", "Re_s", "Im_s", "sheet", "kind", "residual"};
  add_packet_comments(cfg, table);
  for (const NullRoot& r : null_roots(x, t)) {
    auto& row = table.new_row();
    for (int mu = 0; mu < 4; ++mu) row.push_back(x[mu]);
    row.push_back(r.s.real());
    row.push_back(r.s.imag());
    row.push_back(std::int64_t(r.sheet));
    row.push_back(std::string(r.kind == RootKind::Retarded   ? "retarded"
                              : r.kind == RootKind::Advanced ? "advanced"
                                                             : "complexPair"));
    row.push_back(r.residual);
  }
  emit(cfg, table);
  return 0;
}

std::vector<FourVector> grid_points(const GridSpec& grid) {
  std::vector<FourVector> pts;
  for (int i0 = 0; i0 < grid.counts[0]; ++i0)
    for (int i1 = 0; i1 < grid.counts[1]; ++i1)
      for (int i2 = 0; i2 < grid.counts[2]; ++i2)
        for (int i3 = 0; i3 < grid.counts[3]; ++i3) {
          FourVector x = grid.origin;
          const std::array<int, 4> idx{i0, i1, i2, i3};
          for (int mu = 0; mu < 4; ++mu)
            if (grid.counts[mu] > 1)
              x[mu] += grid.extents[mu] * idx[mu] / (grid.counts[mu] - 1);
          pts.push_back(x);
        }
  return pts;
}

int cmd_field(const GlobalArgs& g) {
  const ScenarioConfig cfg = resolve_config(g);
  const EnsembleSpec spec = cfg.ensemble_spec();

  Table table;
  table.columns = {"x0", "x1", "x2", "x3"};
  const std::array<std::pair<int, int>, 6> comps{
      std::pair{1, 0}, {2, 0}, {3, 0}, {2, 3}, {3, 1}, {1, 2}};
  for (const auto& [i, j] : comps) {
    table.columns.push_back("ReF" + std::to_string(i) + std::to_string(j));
    table.columns.push_back("ImF" + std::to_string(i) + std::to_string(j));
  }
  add_packet_comments(cfg, table);

  for (const FourVector& x : grid_points(cfg.grid)) {
    const FaradayC f = ensemble_field(x, spec, g.threads);
    auto& row = table.new_row();
    for (int mu = 0; mu < 4; ++mu) row.push_back(x[mu]);
    for (const auto& [i, j] : comps) {
      row.push_back(f(i, j).real());
      row.push_back(f(i, j).imag());
    }
  }
  emit(cfg, table);
  return 0;
}

int cmd_current(const GlobalArgs& g) {
  const ScenarioConfig cfg = resolve_config(g);
  Table table;
  table.columns = {"x0", "x1", "x2", "x3", "J0", "J1", "J2", "J3"};
  add_packet_comments(cfg, table);
  const std::vector<FourVector> points = grid_points(cfg.grid);
  for (const CurrentSample& cs : current_map(points, cfg.packet, cfg.charge, quad_options(g),
                                             g.threads)) {
    auto& row = table.new_row();
    for (int mu = 0; mu < 4; ++mu) row.push_back(cs.x[mu]);
    for (int mu = 0; mu < 4; ++mu) row.push_back(cs.j[mu]);
  }
  emit(cfg, table);
  return 0;
}

int cmd_power(const GlobalArgs& g, int n_theta) {
  const ScenarioConfig cfg = resolve_config(g);
  const EnsembleSpec spec = cfg.ensemble_spec();
  Table table;
  table.columns = {"R", "P"};
  add_packet_comments(cfg, table);
  for (const PowerPoint& pp : radiated_power(spec, cfg.radii, n_theta, g.threads)) {
    auto& row = table.new_row();
    row.push_back(pp.radius);
    row.push_back(pp.power);
  }
  emit(cfg, table);
  return 0;
}

int cmd_spectrum(const GlobalArgs& g) {
  const ScenarioConfig cfg = resolve_config(g);
  const SpectralResult res = spectral_radiation_check(cfg.packet, cfg.charge);
  Table table;
  table.columns = {"k0", "k1", "k2", "k3", "cone", "magnitude"};
  add_packet_comments(cfg, table);
  table.add_comment("floor = " + format_double(res.floor));
  table.add_comment("dc_charge = " + format_double(res.dc));
  for (const auto* set : {&res.null_k, &res.spacelike_k}) {
    const bool is_null = set == &res.null_k;
    for (const SpectralSample& s : *set) {
      auto& row = table.new_row();
      for (int mu = 0; mu < 4; ++mu) row.push_back(s.k[mu]);
      row.push_back(std::string(is_null ? "null" : "spacelike"));
      row.push_back(s.magnitude);
    }
  }
  emit(cfg, table);
  return 0;
}

int cmd_verify(const GlobalArgs& g) {
  VerifyOptions opts;
  opts.threads = g.threads;
  const std::vector<CriterionResult> results = run_acceptance_suite(opts);
  std::cout << format_report(results);
  return all_passed(results) ? 0 : 1;
}

void report_error(const char* kind, const std::string& message, const std::string& field = "") {
  nlohmann::json j;
  j["error"] = kind;
  j["message"] = message;
  if (!field.empty()) j["field"] = field;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariant Bohmian trajectories and multi-root Lienard-Wiechert fields in complex "
               "Minkowski space"};
  app.require_subcommand(1);
  app.fallthrough(true);  // global flags may follow the subcommand

  GlobalArgs g;
  std::uint64_t seed_arg = 0;
  app.add_option("--config", g.config_path, "JSON scenario configuration file");
  auto* seed_opt = app.add_option("--seed", seed_arg, "override ensemble.seed");
  app.add_option("--threads", g.threads, "worker thread cap (results are thread-count independent)");
  app.add_option("--tolerance", g.tolerance_scale, "scale factor on quadrature tolerances");

  std::vector<double> amp_re, amp_im, point{0, 0, 0, 0};
  int sheet = +1, steps = 101, n_theta = 8;
  double s_lo = -5.0, s_hi = 5.0;

  CLI::App* traj = app.add_subcommand("trajectory", "closed-form trajectory and velocity dump");
  traj->add_option("--amplitude", amp_re, "Re A (4 numbers)")->expected(4);
  traj->add_option("--amplitude-imag", amp_im, "Im A (4 numbers)")->expected(4);
  traj->add_option("--sheet", sheet, "+1 or -1");
  traj->add_option("--s-min", s_lo, "start of the s range");
  traj->add_option("--s-max", s_hi, "end of the s range");
  traj->add_option("--steps", steps, "number of samples (0 = header only)");

  CLI::App* roots = app.add_subcommand("roots", "null world-time roots at a field point");
  roots->add_option("--point", point, "field point x0 x1 x2 x3")->expected(4);
  roots->add_option("--amplitude", amp_re, "Re A (4 numbers)")->expected(4);
  roots->add_option("--amplitude-imag", amp_im, "Im A (4 numbers)")->expected(4);

  CLI::App* field = app.add_subcommand("field", "ensemble Faraday tensor on the config grid");
  CLI::App* current = app.add_subcommand("current", "extended quantum current on the config grid");
  CLI::App* power = app.add_subcommand("power", "radiated power over the config radii");
  power->add_option("--n-theta", n_theta, "polar nodes of the sphere rule");
  CLI::App* spectrum = app.add_subcommand("spectrum", "forward-light-cone spectral indicator");
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  CLI::App* example = app.add_subcommand("config-example", "print an example configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() != 0) {
      report_error("cli", e.what());
      return 2;
    }
    return app.exit(e);  // --help
  }
  if (seed_opt->count() > 0) g.seed = seed_arg;
  if (g.threads < 1) g.threads = 1;

  try {
    if (traj->parsed()) return cmd_trajectory(g, amp_re, amp_im, sheet, s_lo, s_hi, steps);
    if (roots->parsed()) return cmd_roots(g, point, amp_re, amp_im);
    if (field->parsed()) return cmd_field(g);
    if (current->parsed()) return cmd_current(g);
    if (power->parsed()) return cmd_power(g, n_theta);
    if (spectrum->parsed()) return cmd_spectrum(g);
    if (verify->parsed()) return cmd_verify(g);
    if (example->parsed()) {
      std::cout << example_config_text() << "\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    report_error("config", e.what(), e.field());
    return 2;
  } catch (const InvalidInput& e) {
    report_error("invalid-input", e.what());
    return 2;
  } catch (const NumericalError& e) {
    report_error("numerical", e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error("internal", e.what());
    return 1;
  }
  return 2;
}
