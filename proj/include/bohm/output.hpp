#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bohm/ensemble.hpp"
#include "bohm/state.hpp"

namespace bohm {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// CSV with header `run_id,t_prime,q,zhat1,zhat2` and one row per
/// sample, run blocks in run-id order, doubles at full round-trip
/// precision. Deterministic inputs give byte-identical files.
std::string trajectories_csv(const std::vector<Trajectory>& trajs);
void write_trajectories_csv(const std::vector<Trajectory>& trajs, const std::string& path);

/// JSON object with keys n_runs, n_up, fraction_up, expected_fraction,
/// binomial_std, seed, params.
std::string summary_json(const EnsembleSummary& summary);
void write_summary_json(const EnsembleSummary& summary, const std::string& path);

/// Self-contained SVG: one panel per coordinate (Q', Zhat1', Zhat2'),
/// one polyline per run, axes labeled t' and position.
std::string trajectories_svg(const std::vector<Trajectory>& trajs);
void render_svg(const std::vector<Trajectory>& trajs, const std::string& path);

} // namespace bohm
