#include "bohm/params.hpp"

#include <cmath>

namespace bohm {

ModelParams validate_params(const ModelParams& p) {
  if (!(p.spin.w_plus >= 0.0) || !(p.spin.w_minus >= 0.0)) {
    throw RangeError("spin weights must be non-negative (w_plus = " +
                     std::to_string(p.spin.w_plus) + ", w_minus = " +
                     std::to_string(p.spin.w_minus) + ")");
  }
  const double sum = p.spin.w_plus + p.spin.w_minus;
  if (!(std::abs(sum - 1.0) <= kNormalizationTol)) {
    throw NormalizationError("spin weights must sum to 1, got " + std::to_string(sum));
  }
  if (!(p.v_prime > 0.0)) {
    throw RangeError("v_prime must be > 0, got " + std::to_string(p.v_prime));
  }
  if (!(p.V_prime >= 0.0)) {
    throw RangeError("V_prime must be >= 0, got " + std::to_string(p.V_prime));
  }
  if (!(p.eta > 0.0)) {
    throw RangeError("eta must be > 0, got " + std::to_string(p.eta));
  }
  if (p.n_pointer < 1) {
    throw RangeError("n_pointer must be >= 1, got " + std::to_string(p.n_pointer));
  }
  return p;
}

double rapidity(const ModelParams& p) { return p.eta * p.V_prime / p.v_prime; }

double effective_rapidity(const ModelParams& p) { return sqrt_n(p) * rapidity(p); }

double sqrt_n(const ModelParams& p) { return std::sqrt(static_cast<double>(p.n_pointer)); }

} // namespace bohm
