#pragma once

#include <cstdint>
#include <string>

#include "bohm/config.hpp"

namespace bohm {

/// Result of integrating the full and reduced models from matched
/// initial conditions and comparing them on the common sample grid.
struct ReductionReport {
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  double max_q_dev = 0.0; ///< max |Q'_full - Q'_reduced| over samples
  double max_z_dev = 0.0; ///< max |aggregated Z' - Zhat'| over samples

  double max_dev() const { return max_q_dev > max_z_dev ? max_q_dev : max_z_dev; }
};

/// Run the cross-model check: full-model cap n <= 1000. sigma sets the
/// spin polarization; v' = V' = 10.
ReductionReport verify_reduction(std::int64_t n, std::uint64_t seed, double sigma,
                                 const IntegrationConfig& cfg, double eta = 1.0);

/// Entry point behind main(); returns the process exit code.
int run_cli(int argc, char** argv);

} // namespace bohm
