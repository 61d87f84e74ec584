#include "bohm/full_field.hpp"

#include <cmath>

namespace bohm {

namespace {

struct GaussTerms {
  double inv_den_q;  // 1/(1+4t'^2)
  double inv_den_z;  // 1/(1+4 eta^2 t'^2)
  double q_center;   // v' t'
  double z_center;   // eta V' t', drift of a moving pointer packet
};

GaussTerms gauss_terms(double t, const ModelParams& p) {
  const double eta_t = p.eta * t;
  return {1.0 / (1.0 + 4.0 * t * t), 1.0 / (1.0 + 4.0 * eta_t * eta_t), p.v_prime * t,
          p.eta * p.V_prime * t};
}

// log of the two branch densities for the flat layout [q, z_p.., z_n..].
FullLogWeights log_weights_flat(double t, std::span<const double> y, const ModelParams& p) {
  const auto g = gauss_terms(t, p);
  const std::size_t n = static_cast<std::size_t>(p.n_pointer);
  const double q = y[0];

  const double dqp = q - g.q_center;
  const double dqm = q + g.q_center;
  double lp = std::log(p.spin.w_plus) - 2.0 * dqp * dqp * g.inv_den_q;
  double lm = std::log(p.spin.w_minus) - 2.0 * dqm * dqm * g.inv_den_q;

  // Pointer 1 moves in the + branch, is static in the - branch.
  for (std::size_t i = 0; i < n; ++i) {
    const double z = y[1 + i];
    const double dz = z - g.z_center;
    lp += -2.0 * dz * dz * g.inv_den_z;
    lm += -2.0 * z * z * g.inv_den_z;
  }
  // Pointer 2 is static in the + branch, moves downwards in the - branch.
  for (std::size_t i = 0; i < n; ++i) {
    const double z = y[1 + n + i];
    const double dz = z + g.z_center;
    lp += -2.0 * z * z * g.inv_den_z;
    lm += -2.0 * dz * dz * g.inv_den_z;
  }
  return {lp, lm};
}

} // namespace

FullLogWeights full_log_weights(const FullState& s, const ModelParams& p) {
  std::vector<double> y;
  y.reserve(1 + s.z_p.size() + s.z_n.size());
  y.push_back(s.q);
  y.insert(y.end(), s.z_p.begin(), s.z_p.end());
  y.insert(y.end(), s.z_n.begin(), s.z_n.end());
  return log_weights_flat(s.t_prime, y, p);
}

double weight_from_logs(const FullLogWeights& lw) {
  const double d = lw.l_plus - lw.l_minus;
  if (d >= 0.0) return 1.0 / (1.0 + std::exp(-d));
  const double e = std::exp(d);
  return e / (1.0 + e);
}

void full_velocity_flat(double t, std::span<const double> y, std::span<double> dy,
                        const ModelParams& p) {
  const auto g = gauss_terms(t, p);
  const std::size_t n = static_cast<std::size_t>(p.n_pointer);
  const double w = weight_from_logs(log_weights_flat(t, y, p));

  const double four_t = 4.0 * t;
  dy[0] = (w * (p.v_prime + four_t * y[0]) + (1.0 - w) * (-p.v_prime + four_t * y[0])) *
          g.inv_den_q;

  const double eta2_4t = 4.0 * p.eta * p.eta * t;
  for (std::size_t i = 0; i < n; ++i) {
    dy[1 + i] = p.eta * (w * p.V_prime) * g.inv_den_z + eta2_4t * y[1 + i] * g.inv_den_z;
  }
  for (std::size_t i = 0; i < n; ++i) {
    dy[1 + n + i] =
        p.eta * (-(1.0 - w) * p.V_prime) * g.inv_den_z + eta2_4t * y[1 + n + i] * g.inv_den_z;
  }
}

FullVelocity full_velocity(const FullState& s, const ModelParams& p) {
  const std::size_t n = static_cast<std::size_t>(p.n_pointer);
  std::vector<double> y;
  y.reserve(1 + 2 * n);
  y.push_back(s.q);
  y.insert(y.end(), s.z_p.begin(), s.z_p.end());
  y.insert(y.end(), s.z_n.begin(), s.z_n.end());

  std::vector<double> dy(y.size());
  full_velocity_flat(s.t_prime, y, dy, p);

  FullVelocity out;
  out.dq = dy[0];
  out.dz_p.assign(dy.begin() + 1, dy.begin() + 1 + n);
  out.dz_n.assign(dy.begin() + 1 + n, dy.end());
  return out;
}

ReducedState reduce_full_state(const FullState& s) {
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(s.z_p.size()));
  double s1 = 0.0, s2 = 0.0;
  for (double z : s.z_p) s1 += z;
  for (double z : s.z_n) s2 += z;
  return {s.t_prime, s.q, s1 * inv_sqrt_n, s2 * inv_sqrt_n};
}

} // namespace bohm
