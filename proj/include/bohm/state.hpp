#pragma once

#include <cstdint>
#include <vector>

namespace bohm {

/// State of the reduced three-coordinate system: the spin particle
/// position Q' and the two fictitious pointer positions Zhat'_{1,2}.
struct ReducedState {
  double t_prime = 0.0;
  double q = 0.0;
  double zhat1 = 0.0;
  double zhat2 = 0.0;

  bool operator==(const ReducedState&) const = default;
};

/// State of the full 2N+1 coordinate system (oracle model, small N).
struct FullState {
  double t_prime = 0.0;
  double q = 0.0;
  std::vector<double> z_p; ///< pointer-1 particle positions Z'_p
  std::vector<double> z_n; ///< pointer-2 particle positions Z'_n

  bool operator==(const FullState&) const = default;
};

/// Dense time series of reduced states, t' strictly increasing from 0.
struct Trajectory {
  std::vector<ReducedState> samples;
  double rel_tol = 0.0;      ///< integrator tolerance used
  std::int64_t n_steps = 0;  ///< accepted steps
};

/// Dense time series of full states.
struct FullTrajectory {
  std::vector<FullState> samples;
  double rel_tol = 0.0;
  std::int64_t n_steps = 0;
};

} // namespace bohm
