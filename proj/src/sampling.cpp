#include "bohm/sampling.hpp"

#include <string>

#include "bohm/rng.hpp"

namespace bohm {

InitialConditionSpec validate_ic(const InitialConditionSpec& ic) {
  switch (ic.mode) {
  case IcMode::grid:
  case IcMode::fixed:
    if (ic.q0_values.empty()) {
      throw RangeError("grid/fixed initial conditions need at least one q0 value");
    }
    break;
  case IcMode::equilibrium:
    if (ic.count < 1) {
      throw RangeError("equilibrium sampling needs count >= 1, got " +
                       std::to_string(ic.count));
    }
    break;
  }
  return ic;
}

std::vector<double> grid_initial_positions(int n, double half_range) {
  if (n < 1) throw RangeError("grid size must be >= 1");
  if (!(half_range > 0.0)) throw RangeError("grid half range must be > 0");
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = 0.0;
    return out;
  }
  // Integer numerator keeps the grid exactly antisymmetric.
  const double den = static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = half_range * (static_cast<double>(2 * i - (n - 1)) / den);
  }
  return out;
}

namespace {
constexpr double kEquilibriumSd = 0.5; // t=0 density exp(-2 z'^2)
}

std::vector<ReducedState> sample_equilibrium(const ModelParams& /*p*/, std::uint64_t seed,
                                             std::int64_t count) {
  std::vector<ReducedState> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    NormalSampler normal(substream_seed(seed, static_cast<std::uint64_t>(i)));
    ReducedState s;
    s.t_prime = 0.0;
    s.q = kEquilibriumSd * normal();
    s.zhat1 = kEquilibriumSd * normal();
    s.zhat2 = kEquilibriumSd * normal();
    out.push_back(s);
  }
  return out;
}

FullState full_equilibrium_sample(const ModelParams& p, std::uint64_t seed) {
  const std::size_t n = static_cast<std::size_t>(p.n_pointer);
  NormalSampler normal(substream_seed(seed, 0));
  FullState s;
  s.t_prime = 0.0;
  s.q = kEquilibriumSd * normal();
  s.z_p.resize(n);
  s.z_n.resize(n);
  for (double& z : s.z_p) z = kEquilibriumSd * normal();
  for (double& z : s.z_n) z = kEquilibriumSd * normal();
  return s;
}

std::vector<ReducedState> initial_conditions(const ModelParams& p,
                                             const InitialConditionSpec& ic) {
  validate_ic(ic);
  if (ic.mode == IcMode::equilibrium) {
    return sample_equilibrium(p, ic.seed, ic.count);
  }
  std::vector<ReducedState> out;
  out.reserve(ic.q0_values.size());
  for (double q0 : ic.q0_values) {
    out.push_back({0.0, q0, ic.zhat1_0, ic.zhat2_0});
  }
  return out;
}

} // namespace bohm
