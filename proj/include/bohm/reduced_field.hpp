#pragma once

#include <cmath>

#include "bohm/params.hpp"
#include "bohm/state.hpp"

// Velocity field of the reduced system (Q', Zhat1', Zhat2'). Everything
// here is a pure function of (state, params); all calls are reentrant.
//
// Branch weighting is done in log space throughout: the exponents R'
// reach ~1e5 at N = 1e6, far past what exp() survives, so the up-branch
// share of the density is evaluated in logistic form.

namespace bohm {

enum class SpinBranch { plus, minus };

enum class PointerBranch {
  moving_plus,  ///< packet recoiling upwards (+sqrt(N) V')
  moving_minus, ///< packet recoiling downwards (-sqrt(N) V')
  static_pkt    ///< packet that only spreads
};

/// Exponents R'_{1,2} of the two branch densities relative to their
/// shared Gaussian envelope. Both share the Q' term; r1 carries Zhat1',
/// r2 carries Zhat2'.
struct BranchExponents {
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Share w of the up branch in the local density, in [0, 1].
struct BranchWeight {
  double w = 0.0;
};

/// Phase gradient of one spin packet in dimensionless form:
/// (s v' + 4 t' Q') / (1 + 4 t'^2), s = +-1.
inline double spin_phase_gradient(double q, double t, SpinBranch branch, double v_prime) {
  const double s = (branch == SpinBranch::plus) ? 1.0 : -1.0;
  return (s * v_prime + 4.0 * t * q) / (1.0 + 4.0 * t * t);
}

/// Contribution of one pointer packet to d Zhat'/dt', with the eta
/// prefactor from the time rescaling folded in:
///   moving: (s eta sqrt(N) V' + 4 eta^2 t' Zhat') / (1 + 4 eta^2 t'^2)
///   static:                     4 eta^2 t' Zhat'  / (1 + 4 eta^2 t'^2)
inline double pointer_phase_gradient(double zhat, double t, PointerBranch branch,
                                     const ModelParams& p) {
  const double eta_t = p.eta * t;
  const double den = 1.0 + 4.0 * eta_t * eta_t;
  const double spread = 4.0 * p.eta * eta_t * zhat;
  switch (branch) {
  case PointerBranch::moving_plus:
    return (p.eta * sqrt_n(p) * p.V_prime + spread) / den;
  case PointerBranch::moving_minus:
    return (-p.eta * sqrt_n(p) * p.V_prime + spread) / den;
  default:
    return spread / den;
  }
}

/// R'_{1,2} = 4 v' t' Q'/(1+4 t'^2) + 4 eta sqrt(N) V' t' Zhat'_{1,2}/(1+4 eta^2 t'^2)
inline BranchExponents branch_exponents(const ReducedState& s, const ModelParams& p) {
  const double t = s.t_prime;
  const double q_term = 4.0 * p.v_prime * t * s.q / (1.0 + 4.0 * t * t);
  const double eta_t = p.eta * t;
  const double z_coef = 4.0 * p.eta * sqrt_n(p) * p.V_prime * t / (1.0 + 4.0 * eta_t * eta_t);
  return {q_term + z_coef * s.zhat1, q_term + z_coef * s.zhat2};
}

/// Up-branch weight w = |alpha|^2 e^{R1'} / (|alpha|^2 e^{R1'} + |beta|^2 e^{-R2'}),
/// evaluated as a logistic of ln(w+/w-) + R1' + R2'. Safe for |R1'+R2'|
/// up to 1e9 and exact 0/1 for degenerate spin weights.
inline BranchWeight branch_weight(const BranchExponents& ex, const SpinWeights& sw) {
  if (sw.w_plus <= 0.0) return {0.0};
  if (sw.w_minus <= 0.0) return {1.0};
  const double logit = std::log(sw.w_plus) - std::log(sw.w_minus) + ex.r1 + ex.r2;
  if (logit >= 0.0) return {1.0 / (1.0 + std::exp(-logit))};
  const double e = std::exp(logit);
  return {e / (1.0 + e)};
}

struct ReducedVelocity {
  double dq = 0.0;
  double dz1 = 0.0;
  double dz2 = 0.0;
};

/// The full right-hand side:
///   dQ'/dt'    = ((2w-1) v' + 4 t' Q') / (1 + 4 t'^2)
///   dZhat1'/dt' = eta ( w sqrt(N) V'     + 4 eta t' Zhat1') / (1 + 4 eta^2 t'^2)
///   dZhat2'/dt' = eta (-(1-w) sqrt(N) V' + 4 eta t' Zhat2') / (1 + 4 eta^2 t'^2)
/// The field is smooth everywhere; dq depends on the pointer positions
/// only through Zhat1' + Zhat2'.
inline ReducedVelocity reduced_velocity(const ReducedState& s, const ModelParams& p) {
  const double t = s.t_prime;
  const double w = branch_weight(branch_exponents(s, p), p.spin).w;
  const double eta_t = p.eta * t;
  const double den_q = 1.0 + 4.0 * t * t;
  const double den_z = 1.0 + 4.0 * eta_t * eta_t;
  const double drive = sqrt_n(p) * p.V_prime;
  return {
      ((2.0 * w - 1.0) * p.v_prime + 4.0 * t * s.q) / den_q,
      p.eta * (w * drive + 4.0 * eta_t * s.zhat1) / den_z,
      p.eta * (-(1.0 - w) * drive + 4.0 * eta_t * s.zhat2) / den_z,
  };
}

} // namespace bohm
