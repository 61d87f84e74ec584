#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

// Reproducible randomness. SplitMix64 is the per-stream generator;
// substream_seed derives the stream for run k from (seed, k) with a
// Stafford mix13 finalizer, so parallel ensembles are reproducible
// independent of scheduling. Normal variates use explicit Box-Muller:
// std::normal_distribution is implementation defined and would break
// cross-platform byte determinism.

namespace bohm {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Stream seed for run `index` of ensemble `seed`.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + (index + 1) * kGoldenGamma);
}

struct Splitmix64 {
  std::uint64_t state = 0;

  explicit Splitmix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += kGoldenGamma;
    return mix64(state);
  }

  /// Uniform in (0, 1]; never 0, safe under log().
  double uniform_open0() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// Standard normal deviates, Box-Muller with spare caching.
class NormalSampler {
public:
  explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}

  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = rng_.uniform_open0();
    const double u2 = rng_.uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi_v<double> * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

private:
  Splitmix64 rng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

} // namespace bohm
