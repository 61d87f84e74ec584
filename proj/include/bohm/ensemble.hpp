#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bohm/integrator.hpp"
#include "bohm/params.hpp"
#include "bohm/sampling.hpp"
#include "bohm/state.hpp"

namespace bohm {

/// Final Q' too close to zero to call: t_max was too small.
class AmbiguousOutcome : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class OutcomeLabel { up, down };

struct Outcome {
  OutcomeLabel label = OutcomeLabel::up;
  double q_final = 0.0;
  double z1_final = 0.0;
  double z2_final = 0.0;
};

/// Label from the sign of the final Q'. The final branch weight agrees
/// with the sign whenever the packets are separated; it is recorded by
/// the ensemble as a diagnostic, not used for classification.
/// Warns on stderr (once per call) when the branch separation
/// 2 v' t_max < 10; throws AmbiguousOutcome when |q_final| < 1e-6.
Outcome classify_outcome(const Trajectory& traj, const ModelParams& p,
                         bool warn_separation = true);

struct RunRecord {
  std::int64_t run_id = 0;
  ReducedState initial;
  Outcome outcome;
  double weight_final = 0.0; ///< branch weight w at t_max (diagnostic)
};

struct EnsembleSummary {
  std::int64_t n_runs = 0;
  std::int64_t n_up = 0;
  double fraction_up = 0.0;
  double expected_fraction = 0.0; ///< = w_plus
  double binomial_std = 0.0;      ///< sqrt(w_plus w_minus / n_runs)
  std::uint64_t seed = 0;
  ModelParams params;
  std::vector<RunRecord> runs;
};

/// Integrate every initial condition of the batch, densely sampled.
/// Runs are distributed over `n_threads` workers writing to fixed
/// per-run slots; the result is identical for any thread count.
/// n_threads <= 0 picks the hardware concurrency.
std::vector<Trajectory> run_trajectories(const ModelParams& p, const InitialConditionSpec& ic,
                                         const IntegrationConfig& cfg, int n_threads = 0);

/// Born-rule experiment: integrate the batch (final state only),
/// classify outcomes, aggregate in run-id order. Integration errors are
/// rethrown with the run index attached.
EnsembleSummary run_ensemble(const ModelParams& p, const InitialConditionSpec& ic,
                             const IntegrationConfig& cfg, int n_threads = 0);

} // namespace bohm
