#include "bohm/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bohm/ensemble.hpp"
#include "bohm/full_field.hpp"
#include "bohm/output.hpp"

namespace bohm {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig load_config(const std::string& config_path, const std::string& preset) {
  if (!config_path.empty() && !preset.empty()) {
    throw ParseError("give either --config or --preset, not both");
  }
  if (!config_path.empty()) return parse_config(read_file(config_path));
  if (!preset.empty()) return figure_preset(preset);
  throw ParseError("one of --config or --preset is required");
}

// --seed beats the BOHM_SEED environment variable, which beats ic.seed.
void apply_seed(RunConfig& cfg, const std::optional<std::uint64_t>& seed_flag) {
  if (seed_flag) {
    cfg.ic.seed = *seed_flag;
    return;
  }
  if (const char* env = std::getenv("BOHM_SEED")) {
    try {
      cfg.ic.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("BOHM_SEED is not an unsigned integer: '") + env + "'");
    }
  }
}

int cmd_trajectories(const std::string& config_path, const std::string& preset,
                     const std::string& out_csv, const std::string& out_svg,
                     const std::optional<std::uint64_t>& seed_flag, int threads) {
  RunConfig cfg = load_config(config_path, preset);
  apply_seed(cfg, seed_flag);
  if (!out_csv.empty()) cfg.outputs.csv_path = out_csv;
  if (!out_svg.empty()) cfg.outputs.svg_path = out_svg;
  if (cfg.outputs.csv_path.empty() && cfg.outputs.svg_path.empty()) {
    throw ValidationError("no output requested; pass --out-csv and/or --out-svg");
  }

  const std::vector<Trajectory> trajs = run_trajectories(cfg.params, cfg.ic, cfg.integration,
                                                         threads);
  std::int64_t steps = 0;
  for (const Trajectory& t : trajs) steps += t.n_steps;

  if (!cfg.outputs.csv_path.empty()) write_trajectories_csv(trajs, cfg.outputs.csv_path);
  if (!cfg.outputs.svg_path.empty()) render_svg(trajs, cfg.outputs.svg_path);

  std::cout << "integrated " << trajs.size() << " trajectories (" << steps
            << " accepted steps total)\n";
  if (!cfg.outputs.csv_path.empty()) std::cout << "wrote " << cfg.outputs.csv_path << "\n";
  if (!cfg.outputs.svg_path.empty()) std::cout << "wrote " << cfg.outputs.svg_path << "\n";
  return 0;
}

int cmd_ensemble(const std::string& config_path, const std::string& preset, std::int64_t runs,
                 const std::optional<std::uint64_t>& seed_flag, const std::string& out_json,
                 int threads) {
  RunConfig cfg = load_config(config_path, preset);
  apply_seed(cfg, seed_flag);
  if (runs > 0) {
    cfg.ic.mode = IcMode::equilibrium;
    cfg.ic.count = runs;
  }
  if (!out_json.empty()) cfg.outputs.summary_path = out_json;

  const EnsembleSummary summary = run_ensemble(cfg.params, cfg.ic, cfg.integration, threads);
  if (!cfg.outputs.summary_path.empty()) {
    write_summary_json(summary, cfg.outputs.summary_path);
  }

  std::cout << "runs=" << summary.n_runs << " up=" << summary.n_up
            << " fraction_up=" << summary.fraction_up
            << " expected=" << summary.expected_fraction
            << " binomial_std=" << summary.binomial_std << " seed=" << summary.seed << "\n";
  if (!cfg.outputs.summary_path.empty()) {
    std::cout << "wrote " << cfg.outputs.summary_path << "\n";
  }
  return 0;
}

int cmd_preset_list() {
  for (const std::string& id : preset_ids()) {
    const RunConfig c = figure_preset(id);
    std::cout << id << ": v'=" << c.params.v_prime << " V'=" << c.params.V_prime
              << " eta=" << c.params.eta << " N=" << c.params.n_pointer
              << " sigma=" << polarization(c.params.spin) << " zhat0=(" << c.ic.zhat1_0 << ", "
              << c.ic.zhat2_0 << ")"
              << " grid=" << c.ic.grid_n << " x [-" << c.ic.grid_half_range << ", "
              << c.ic.grid_half_range << "]\n";
  }
  return 0;
}

} // namespace

ReductionReport verify_reduction(std::int64_t n, std::uint64_t seed, double sigma,
                                 const IntegrationConfig& cfg, double eta) {
  if (n < 1 || n > 1000) {
    throw RangeError("full-model n must be in [1, 1000], got " + std::to_string(n));
  }
  ModelParams p;
  p.v_prime = 10.0;
  p.V_prime = 10.0;
  p.eta = eta;
  p.n_pointer = n;
  p.spin = SpinWeights::from_sigma(sigma);
  validate_params(p);

  const FullState full0 = full_equilibrium_sample(p, seed);
  const ReducedState red0 = reduce_full_state(full0);

  const FullTrajectory full_traj = integrate_full(p, full0, cfg);
  const Trajectory red_traj = integrate_reduced(p, red0, cfg);
  if (full_traj.samples.size() != red_traj.samples.size()) {
    throw std::runtime_error("sample grids of the two models disagree");
  }

  ReductionReport report;
  report.n = n;
  report.seed = seed;
  for (std::size_t i = 0; i < full_traj.samples.size(); ++i) {
    const ReducedState agg = reduce_full_state(full_traj.samples[i]);
    const ReducedState& red = red_traj.samples[i];
    report.max_q_dev = std::max(report.max_q_dev, std::abs(agg.q - red.q));
    report.max_z_dev = std::max(report.max_z_dev, std::abs(agg.zhat1 - red.zhat1));
    report.max_z_dev = std::max(report.max_z_dev, std::abs(agg.zhat2 - red.zhat2));
  }
  return report;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"de Broglie-Bohm trajectories for an optical Stern-Gerlach measurement model"};
  app.require_subcommand(1);

  std::string config_path, preset, out_csv, out_svg, out_json;
  std::optional<std::uint64_t> seed_flag;
  std::int64_t runs = 0;
  int threads = 0;

  CLI::App* traj = app.add_subcommand("trajectories", "integrate a batch and emit CSV/SVG");
  traj->add_option("--config", config_path, "config file (key=value)");
  traj->add_option("--preset", preset, "figure preset id (fig2 .. fig10)");
  traj->add_option("--out-csv", out_csv, "trajectory CSV path");
  traj->add_option("--out-svg", out_svg, "trajectory SVG path");
  traj->add_option("--seed", seed_flag, "sampling seed (fallback: BOHM_SEED)");
  traj->add_option("--threads", threads, "worker threads (default: hardware)");

  CLI::App* ens = app.add_subcommand("ensemble", "Born-rule experiment over sampled runs");
  ens->add_option("--config", config_path, "config file (key=value)");
  ens->add_option("--preset", preset, "figure preset id (fig2 .. fig10)");
  ens->add_option("--runs", runs, "equilibrium-sampled run count (overrides ic.count)");
  ens->add_option("--seed", seed_flag, "sampling seed (fallback: BOHM_SEED)");
  ens->add_option("--out-json", out_json, "summary JSON path");
  ens->add_option("--threads", threads, "worker threads (default: hardware)");

  std::int64_t vr_n = 4;
  std::uint64_t vr_seed = 0;
  double vr_tol = 1e-6;
  double vr_sigma = 0.5;
  double vr_eta = 1.0;
  double vr_rel_tol = 1e-9;
  CLI::App* ver = app.add_subcommand(
      "verify-reduction", "integrate the full and reduced models from matched initial "
                          "conditions and report the max deviation");
  ver->add_option("--n", vr_n, "particles per pointer (<= 1000)");
  ver->add_option("--seed", vr_seed, "equilibrium sampling seed");
  ver->add_option("--tol", vr_tol, "max allowed deviation");
  ver->add_option("--sigma", vr_sigma, "spin polarization");
  ver->add_option("--eta", vr_eta, "mass/width ratio");
  ver->add_option("--rel-tol", vr_rel_tol, "integrator relative tolerance");

  CLI::App* pl = app.add_subcommand("preset-list", "enumerate figure presets");

  try {
    app.parse(argc, argv);

    if (traj->parsed()) {
      return cmd_trajectories(config_path, preset, out_csv, out_svg, seed_flag, threads);
    }
    if (ens->parsed()) {
      return cmd_ensemble(config_path, preset, runs, seed_flag, out_json, threads);
    }
    if (ver->parsed()) {
      ModelParams p;
      p.n_pointer = vr_n > 0 ? vr_n : 1;
      p.eta = vr_eta;
      IntegrationConfig cfg;
      cfg.rel_tol = vr_rel_tol;
      cfg.abs_tol = 1e-12;
      cfg.max_step = default_max_step(p);
      cfg.sample_interval = 0.01;
      const ReductionReport report = verify_reduction(vr_n, vr_seed, vr_sigma, cfg, vr_eta);
      std::cout << "n=" << report.n << " seed=" << report.seed
                << " max_q_dev=" << report.max_q_dev << " max_z_dev=" << report.max_z_dev
                << " tol=" << vr_tol << "\n";
      if (report.max_dev() > vr_tol) {
        std::cerr << "FAIL: deviation above tolerance\n";
        return 1;
      }
      std::cout << "OK\n";
      return 0;
    }
    if (pl->parsed()) return cmd_preset_list();
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace bohm
