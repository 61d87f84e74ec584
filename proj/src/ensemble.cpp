#include "bohm/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <optional>
#include <thread>

#include "bohm/reduced_field.hpp"

namespace bohm {

namespace {

constexpr double kAmbiguousQ = 1e-6;
constexpr double kMinSeparation = 10.0; // in units of the packet width

int resolve_threads(int n_threads, std::size_t n_runs) {
  if (n_threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    n_threads = hw ? static_cast<int>(hw) : 1;
  }
  if (static_cast<std::size_t>(n_threads) > n_runs) n_threads = static_cast<int>(n_runs);
  return n_threads < 1 ? 1 : n_threads;
}

// Run `work(i)` for i in [0, n) on a pool; results must go to per-index
// slots so that aggregation order never depends on scheduling. The
// first failure (lowest run index) is rethrown with the index attached.
template <typename Work>
void parallel_for_runs(std::size_t n, int n_threads, Work&& work) {
  n_threads = resolve_threads(n_threads, n);
  if (n_threads == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        work(i);
      } catch (const std::exception& e) {
        throw std::runtime_error("run " + std::to_string(i) + ": " + e.what());
      }
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_error{n};
  std::vector<std::string> errors(n);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          work(i);
        } catch (const std::exception& e) {
          errors[i] = e.what();
          std::size_t cur = first_error.load();
          while (i < cur && !first_error.compare_exchange_weak(cur, i)) {
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();

  const std::size_t bad = first_error.load();
  if (bad < n) {
    throw std::runtime_error("run " + std::to_string(bad) + ": " + errors[bad]);
  }
}

void warn_if_unseparated(const ModelParams& p, double t_max) {
  const double separation = 2.0 * p.v_prime * t_max;
  if (separation < kMinSeparation) {
    std::cerr << "warning: branch separation 2 v' t_max = " << separation
              << " < " << kMinSeparation << "; outcomes may not be settled\n";
  }
}

} // namespace

Outcome classify_outcome(const Trajectory& traj, const ModelParams& p, bool warn_separation) {
  if (traj.samples.empty()) throw RangeError("cannot classify an empty trajectory");
  const ReducedState& last = traj.samples.back();
  if (warn_separation) warn_if_unseparated(p, last.t_prime);
  if (std::abs(last.q) < kAmbiguousQ) {
    throw AmbiguousOutcome("final Q' = " + std::to_string(last.q) +
                           " is too close to zero; increase t_max");
  }
  Outcome out;
  out.label = last.q > 0.0 ? OutcomeLabel::up : OutcomeLabel::down;
  out.q_final = last.q;
  out.z1_final = last.zhat1;
  out.z2_final = last.zhat2;
  return out;
}

std::vector<Trajectory> run_trajectories(const ModelParams& p, const InitialConditionSpec& ic,
                                         const IntegrationConfig& cfg, int n_threads) {
  validate_params(p);
  const std::vector<ReducedState> initials = initial_conditions(p, ic);
  std::vector<Trajectory> out(initials.size());
  parallel_for_runs(initials.size(), n_threads,
                    [&](std::size_t i) { out[i] = integrate_reduced(p, initials[i], cfg); });
  return out;
}

EnsembleSummary run_ensemble(const ModelParams& p, const InitialConditionSpec& ic,
                             const IntegrationConfig& cfg, int n_threads) {
  validate_params(p);
  const std::vector<ReducedState> initials = initial_conditions(p, ic);
  warn_if_unseparated(p, cfg.t_max);

  // Final state is all that matters here; skip dense sampling.
  IntegrationConfig sparse = cfg;
  sparse.sample_interval = cfg.t_max;

  std::vector<RunRecord> records(initials.size());
  parallel_for_runs(initials.size(), n_threads, [&](std::size_t i) {
    const Trajectory traj = integrate_reduced(p, initials[i], sparse);
    RunRecord rec;
    rec.run_id = static_cast<std::int64_t>(i);
    rec.initial = initials[i];
    rec.outcome = classify_outcome(traj, p, /*warn_separation=*/false);
    const ReducedState& last = traj.samples.back();
    rec.weight_final = branch_weight(branch_exponents(last, p), p.spin).w;
    records[i] = rec;
  });

  EnsembleSummary summary;
  summary.n_runs = static_cast<std::int64_t>(records.size());
  for (const RunRecord& rec : records) {
    if (rec.outcome.label == OutcomeLabel::up) ++summary.n_up;
  }
  summary.fraction_up =
      summary.n_runs > 0 ? static_cast<double>(summary.n_up) / static_cast<double>(summary.n_runs)
                         : 0.0;
  summary.expected_fraction = p.spin.w_plus;
  summary.binomial_std =
      summary.n_runs > 0
          ? std::sqrt(p.spin.w_plus * p.spin.w_minus / static_cast<double>(summary.n_runs))
          : 0.0;
  summary.seed = ic.seed;
  summary.params = p;
  summary.runs = std::move(records);
  return summary;
}

} // namespace bohm
