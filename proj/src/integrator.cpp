#include "bohm/integrator.hpp"

#include <string>

#include "bohm/full_field.hpp"
#include "bohm/reduced_field.hpp"

namespace bohm {

IntegrationConfig validate_config(const IntegrationConfig& cfg) {
  if (!(cfg.t_max > 0.0)) throw RangeError("t_max must be > 0");
  if (!(cfg.rel_tol > 0.0 && cfg.rel_tol <= 1e-3)) {
    throw RangeError("rel_tol must be in (0, 1e-3], got " + std::to_string(cfg.rel_tol));
  }
  if (!(cfg.abs_tol > 0.0)) throw RangeError("abs_tol must be > 0");
  if (!(cfg.max_step > 0.0)) throw RangeError("max_step must be > 0");
  if (!(cfg.sample_interval > 0.0 && cfg.sample_interval <= cfg.t_max)) {
    throw RangeError("sample_interval must be in (0, t_max]");
  }
  return cfg;
}

double default_max_step(const ModelParams& p) {
  return std::min(1e-2, 0.1 / (1.0 + p.eta * sqrt_n(p) * p.V_prime));
}

Trajectory integrate_reduced(const ModelParams& p, const ReducedState& initial,
                             const IntegrationConfig& cfg) {
  validate_config(cfg);
  Trajectory traj;
  traj.rel_tol = cfg.rel_tol;

  const double y0[3] = {initial.q, initial.zhat1, initial.zhat2};
  auto field = [&p](double t, std::span<const double> y, std::span<double> dy) {
    const ReducedVelocity v = reduced_velocity({t, y[0], y[1], y[2]}, p);
    dy[0] = v.dq;
    dy[1] = v.dz1;
    dy[2] = v.dz2;
  };
  auto emit = [&traj](double t, std::span<const double> y) {
    traj.samples.push_back({t, y[0], y[1], y[2]});
  };
  traj.n_steps = integrate(field, std::span<const double>(y0, 3), cfg, emit);
  return traj;
}

FullTrajectory integrate_full(const ModelParams& p, const FullState& initial,
                              const IntegrationConfig& cfg) {
  validate_config(cfg);
  const std::size_t n = static_cast<std::size_t>(p.n_pointer);
  if (initial.z_p.size() != n || initial.z_n.size() != n) {
    throw RangeError("full state size does not match n_pointer");
  }

  FullTrajectory traj;
  traj.rel_tol = cfg.rel_tol;

  std::vector<double> y0;
  y0.reserve(1 + 2 * n);
  y0.push_back(initial.q);
  y0.insert(y0.end(), initial.z_p.begin(), initial.z_p.end());
  y0.insert(y0.end(), initial.z_n.begin(), initial.z_n.end());

  auto field = [&p](double t, std::span<const double> y, std::span<double> dy) {
    full_velocity_flat(t, y, dy, p);
  };
  auto emit = [&traj, n](double t, std::span<const double> y) {
    FullState s;
    s.t_prime = t;
    s.q = y[0];
    s.z_p.assign(y.begin() + 1, y.begin() + 1 + n);
    s.z_n.assign(y.begin() + 1 + n, y.end());
    traj.samples.push_back(std::move(s));
  };
  traj.n_steps = integrate(field, std::span<const double>(y0), cfg, emit);
  return traj;
}

} // namespace bohm
