#pragma once

#include <span>

#include "bohm/params.hpp"
#include "bohm/state.hpp"

// Brute-force oracle: the per-particle velocity field of the full
// 2N+1 coordinate system, built directly from the squared moduli of
// the Gaussian packets rather than from the cancelled substitutions,
// so that it validates the reduced model independently.

namespace bohm {

/// Logs of the two unnormalized branch densities at the current
/// configuration. Only l_plus - l_minus is meaningful; the common
/// normalization constants are omitted (they cancel).
struct FullLogWeights {
  double l_plus = 0.0;
  double l_minus = 0.0;
};

FullLogWeights full_log_weights(const FullState& s, const ModelParams& p);

/// Up-branch weight logistic(l_plus - l_minus); tolerates +-inf logs
/// from degenerate spin weights.
double weight_from_logs(const FullLogWeights& lw);

struct FullVelocity {
  double dq = 0.0;
  std::vector<double> dz_p;
  std::vector<double> dz_n;
};

FullVelocity full_velocity(const FullState& s, const ModelParams& p);

/// Same field on the flat layout [q, z_p[0..N), z_n[0..N)] used by the
/// integrator; writes into dy without allocating.
void full_velocity_flat(double t, std::span<const double> y, std::span<double> dy,
                        const ModelParams& p);

/// Fictitious-pointer aggregation: Zhat'_{1,2} = (1/sqrt(N)) sum Z'.
ReducedState reduce_full_state(const FullState& s);

} // namespace bohm
