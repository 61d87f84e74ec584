#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bohm/params.hpp"
#include "bohm/state.hpp"

// Adaptive explicit integration: Dormand-Prince 5(4) embedded pair with
// PI step-size control (Lund stabilization) and cubic Hermite dense
// output on accepted steps. Output samples land exactly on the
// requested grid k * sample_interval plus t_max. One integration is
// single threaded and bitwise deterministic; many can run concurrently.

namespace bohm {

struct IntegrationConfig {
  double t_max = 1.0;
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  double max_step = 1e-2;
  double sample_interval = 5e-3;

  bool operator==(const IntegrationConfig&) const = default;
};

/// Throws RangeError unless t_max > 0, 0 < rel_tol <= 1e-3, abs_tol > 0,
/// 0 < max_step, 0 < sample_interval <= t_max.
IntegrationConfig validate_config(const IntegrationConfig& cfg);

/// Step size underflowed below 1e-14: pathological parameters.
class StepFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Dormand-Prince 5(4) tableau.
inline constexpr double kC2 = 1.0 / 5.0, kC3 = 3.0 / 10.0, kC4 = 4.0 / 5.0, kC5 = 8.0 / 9.0;
inline constexpr double kA21 = 1.0 / 5.0;
inline constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
inline constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
inline constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                        kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
inline constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0, kA63 = 46732.0 / 5247.0,
                        kA64 = 49.0 / 176.0, kA65 = -5103.0 / 18656.0;
// Fifth-order weights; the seventh (FSAL) stage has weight 0.
inline constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0, kB4 = 125.0 / 192.0,
                        kB5 = -2187.0 / 6784.0, kB6 = 11.0 / 84.0;
// Difference between the 5th and embedded 4th order weights.
inline constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0, kE4 = 71.0 / 1920.0,
                        kE5 = -17253.0 / 339200.0, kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;

inline constexpr double kMinStep = 1e-14;
inline constexpr double kSafety = 0.9;
inline constexpr double kBeta = 0.04; // PI stabilization
inline constexpr double kExpo1 = 0.2 - kBeta * 0.75;
inline constexpr double kFacMin = 0.2;
inline constexpr double kFacMax = 10.0;

} // namespace detail

/// Integrate dy/dt = field(t, y) from t = 0 to cfg.t_max.
///
/// field: callable void(double t, std::span<const double> y, std::span<double> dy)
/// emit:  callable void(double t, std::span<const double> y), invoked at
///        t = 0, at every grid point k * sample_interval < t_max
///        (interpolated), and at t_max (integrator endpoint).
/// Returns the number of accepted steps.
template <typename Field, typename Emit>
std::int64_t integrate(Field&& field, std::span<const double> y0, const IntegrationConfig& cfg,
                       Emit&& emit) {
  using namespace detail;
  const std::size_t n = y0.size();
  const double t_max = cfg.t_max;
  const double dt_sample = cfg.sample_interval;

  std::vector<double> y(y0.begin(), y0.end());
  std::vector<double> y_new(n), y_tmp(n);
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);

  double t = 0.0;
  field(t, std::span<const double>(y), std::span<double>(k1));
  emit(0.0, std::span<const double>(y));

  // Next output grid index; grid point k = 0 was just emitted.
  std::int64_t next_sample = 1;

  double h = std::min(cfg.max_step, t_max / 100.0);
  double facold = 1e-4;
  bool rejected = false;
  std::int64_t n_steps = 0;

  while (t < t_max) {
    bool last = false;
    if (t + h >= t_max) {
      h = t_max - t;
      last = true;
    }
    if (h < kMinStep) {
      if (last) {
        // Remaining interval below resolution; snap to the end.
        emit(t_max, std::span<const double>(y));
        return n_steps;
      }
      throw StepFailure("integrator step size underflow (h < 1e-14) at t' = " + std::to_string(t));
    }

    for (std::size_t i = 0; i < n; ++i) y_tmp[i] = y[i] + h * kA21 * k1[i];
    field(t + kC2 * h, std::span<const double>(y_tmp), std::span<double>(k2));
    for (std::size_t i = 0; i < n; ++i) y_tmp[i] = y[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
    field(t + kC3 * h, std::span<const double>(y_tmp), std::span<double>(k3));
    for (std::size_t i = 0; i < n; ++i)
      y_tmp[i] = y[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
    field(t + kC4 * h, std::span<const double>(y_tmp), std::span<double>(k4));
    for (std::size_t i = 0; i < n; ++i)
      y_tmp[i] = y[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] + kA54 * k4[i]);
    field(t + kC5 * h, std::span<const double>(y_tmp), std::span<double>(k5));
    for (std::size_t i = 0; i < n; ++i)
      y_tmp[i] = y[i] + h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] + kA64 * k4[i] +
                             kA65 * k5[i]);
    field(t + h, std::span<const double>(y_tmp), std::span<double>(k6));

    const double t_new = last ? t_max : t + h;
    for (std::size_t i = 0; i < n; ++i)
      y_new[i] = y[i] + h * (kB1 * k1[i] + kB3 * k3[i] + kB4 * k4[i] + kB5 * k5[i] + kB6 * k6[i]);
    field(t_new, std::span<const double>(y_new), std::span<double>(k7));

    double err_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] + kE6 * k6[i] +
                            kE7 * k7[i]);
      const double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err_sq += (e / sc) * (e / sc);
    }
    const double err = std::sqrt(err_sq / static_cast<double>(n));
    const double fac11 = std::pow(err, kExpo1);

    if (err <= 1.0) {
      // Accepted: emit all grid points in (t, t_new] by cubic Hermite
      // interpolation on (y, k1) -- (y_new, k7).
      while (next_sample * dt_sample <= t_new && next_sample * dt_sample < t_max) {
        const double ts = next_sample * dt_sample;
        const double theta = (ts - t) / h;
        const double om = 1.0 - theta;
        const double h00 = (1.0 + 2.0 * theta) * om * om;
        const double h10 = theta * om * om;
        const double h01 = theta * theta * (3.0 - 2.0 * theta);
        const double h11 = theta * theta * (theta - 1.0);
        for (std::size_t i = 0; i < n; ++i)
          y_tmp[i] = h00 * y[i] + h10 * h * k1[i] + h01 * y_new[i] + h11 * h * k7[i];
        emit(ts, std::span<const double>(y_tmp));
        ++next_sample;
      }

      ++n_steps;
      t = t_new;
      std::swap(y, y_new);
      std::swap(k1, k7); // FSAL
      if (last) {
        emit(t_max, std::span<const double>(y));
        return n_steps;
      }
      double fac = fac11 / std::pow(facold, kBeta);
      fac = std::clamp(fac / kSafety, 1.0 / kFacMax, 1.0 / kFacMin);
      facold = std::max(err, 1e-4);
      double h_new = h / fac;
      if (rejected) h_new = std::min(h_new, h);
      h = std::min(h_new, cfg.max_step);
      rejected = false;
    } else {
      h = h / std::min(1.0 / kFacMin, fac11 / kSafety);
      rejected = true;
    }
  }
  return n_steps;
}

/// Integrate the reduced system with the field from reduced_field.hpp.
Trajectory integrate_reduced(const ModelParams& p, const ReducedState& initial,
                             const IntegrationConfig& cfg);

/// Integrate the full 2N+1 system (oracle model).
FullTrajectory integrate_full(const ModelParams& p, const FullState& initial,
                              const IntegrationConfig& cfg);

/// Default ceiling on the step size: min(1e-2, 0.1 / (1 + eta sqrt(N) V')),
/// so the branch-weight transition (time scale ~1/(eta sqrt(N) V')) is
/// always resolved.
double default_max_step(const ModelParams& p);

} // namespace bohm
