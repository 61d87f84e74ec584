#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bohm {

/// Base class for parameter/config validation failures.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// |alpha|^2 + |beta|^2 != 1.
class NormalizationError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// A parameter is outside its admissible range.
class RangeError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// Spin superposition weights. Only the moduli squared of the two
/// amplitudes enter the dynamics, so the weights are stored as
/// probabilities; relative phase is not represented.
struct SpinWeights {
  double w_plus = 0.5;  ///< |alpha|^2
  double w_minus = 0.5; ///< |beta|^2

  /// Build weights from the polarization sigma = w_plus - w_minus.
  static SpinWeights from_sigma(double sigma) {
    return {0.5 * (1.0 + sigma), 0.5 * (1.0 - sigma)};
  }

  bool operator==(const SpinWeights&) const = default;
};

/// Spin polarization sigma = |alpha|^2 - |beta|^2, in [-1, 1].
inline double polarization(const SpinWeights& s) { return s.w_plus - s.w_minus; }

/// The dimensionless physics inputs. Both pointers hold the same
/// number of particles; the fictitious-pointer reduction requires it.
struct ModelParams {
  double v_prime = 10.0;        ///< spin recoil velocity v' = (m a / hbar) v_z, > 0
  double V_prime = 10.0;        ///< pointer velocity V' = (M b / hbar) V, >= 0
  double eta = 1.0;             ///< mass/width ratio eta = m a^2 / (M b^2), > 0
  std::int64_t n_pointer = 1;   ///< particles per pointer, >= 1
  SpinWeights spin;

  bool operator==(const ModelParams&) const = default;
};

/// Normalization slack allowed on w_plus + w_minus.
inline constexpr double kNormalizationTol = 1e-12;

/// Returns p unchanged if every invariant holds.
/// Throws NormalizationError or RangeError otherwise.
ModelParams validate_params(const ModelParams& p);

/// Rapidity E = eta V'/v': ratio of the packet-separation time scales
/// of the spin particle and of a single pointer particle.
double rapidity(const ModelParams& p);

/// sqrt(N) E — the rapidity of the fictitious single-particle pointers,
/// whose effective velocity is sqrt(N) V.
double effective_rapidity(const ModelParams& p);

/// sqrt(N) as a double, shared by the velocity-field code.
double sqrt_n(const ModelParams& p);

} // namespace bohm
