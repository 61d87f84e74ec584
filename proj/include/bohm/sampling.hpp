#pragma once

#include <cstdint>
#include <vector>

#include "bohm/params.hpp"
#include "bohm/state.hpp"

namespace bohm {

enum class IcMode { grid, equilibrium, fixed };

/// How a batch of initial conditions is produced.
///
/// grid:        one run per entry of q0_values (generated from grid_n /
///              grid_half_range at parse time), pointers at (zhat1_0, zhat2_0).
/// fixed:       like grid, but q0_values given explicitly.
/// equilibrium: `count` runs with Q'(0), Zhat1'(0), Zhat2'(0) all drawn
///              from the t=0 quantum-equilibrium density.
struct InitialConditionSpec {
  IcMode mode = IcMode::grid;
  std::vector<double> q0_values;
  int grid_n = 41;
  double grid_half_range = 1.5;
  double zhat1_0 = 0.0;
  double zhat2_0 = 0.0;
  std::uint64_t seed = 0;
  std::int64_t count = 0;

  bool operator==(const InitialConditionSpec&) const = default;
};

/// Throws RangeError unless the mode's requirements hold (grid/fixed:
/// at least one q0 value; equilibrium: count >= 1).
InitialConditionSpec validate_ic(const InitialConditionSpec& ic);

/// n values equally spaced over [-half_range, +half_range], inclusive.
/// n = 1 yields {0}. Exactly symmetric under negation: out[i] is the
/// bitwise negation of out[n-1-i].
std::vector<double> grid_initial_positions(int n, double half_range);

/// At t = 0 every packet's squared modulus is exp(-2 z'^2) in its own
/// dimensionless coordinate, i.e. Normal(0, sd 1/2); the aggregated
/// Zhat' have the same law as any individual Z'. Run i draws
/// (Q', Zhat1', Zhat2') from the substream (seed, i), so samples are
/// independent across runs and reproducible regardless of scheduling.
std::vector<ReducedState> sample_equilibrium(const ModelParams& p, std::uint64_t seed,
                                             std::int64_t count);

/// One full-model configuration at t = 0: Q' and every Z'_p, Z'_n drawn
/// Normal(0, sd 1/2) from substream (seed, 0), in the order
/// q, z_p[0..N), z_n[0..N).
FullState full_equilibrium_sample(const ModelParams& p, std::uint64_t seed);

/// Materialize the batch of reduced initial states described by `ic`.
std::vector<ReducedState> initial_conditions(const ModelParams& p,
                                             const InitialConditionSpec& ic);

} // namespace bohm
