// Independent oracle for the unit rescaling: evaluates the velocity
// fields in dimensional (SI-like) form, straight from the Gaussian
// packet phases and squared moduli, then converts to dimensionless
// units and compares against the production fields. This pins the eta
// prefactor, the eta^2 denominators and the sign of the second
// pointer's drift to the dimensional dynamics rather than to a second
// copy of the same conversion.

#include <cmath>
#include <vector>

#include <doctest.h>

#include "bohm/full_field.hpp"
#include "bohm/reduced_field.hpp"
#include "bohm/rng.hpp"

using namespace bohm;

namespace {

struct DimConsts {
  double hbar, m, M, a, b, v, V;
};

// Arbitrary dimensional constants realizing (v', V', eta); b is fixed
// by eta = m a^2 / (M b^2).
DimConsts realize(const ModelParams& p, double hbar, double m, double M, double a) {
  DimConsts c;
  c.hbar = hbar;
  c.m = m;
  c.M = M;
  c.a = a;
  c.b = std::sqrt(m * a * a / (M * p.eta));
  c.v = hbar * p.v_prime / (m * a);
  c.V = hbar * p.V_prime / (M * c.b);
  return c;
}

double den_a(double t, const DimConsts& c) {
  return c.a * c.a * c.a * c.a + 4.0 * c.hbar * c.hbar * t * t / (c.m * c.m);
}
double den_b(double t, const DimConsts& c) {
  return c.b * c.b * c.b * c.b + 4.0 * c.hbar * c.hbar * t * t / (c.M * c.M);
}

// phase gradients of the spin and pointer packets
double grad_S(double Q, double t, double s, const DimConsts& c) {
  return s * c.m * c.v / c.hbar + (4.0 * c.hbar * t / c.m) * (Q - s * c.v * t) / den_a(t, c);
}
double grad_xi_moving(double Z, double t, double s, double drive_v, const DimConsts& c) {
  return s * c.M * drive_v / c.hbar +
         (4.0 * c.hbar * t / c.M) * (Z - s * drive_v * t) / den_b(t, c);
}
double grad_xi_static(double Z, double t, const DimConsts& c) {
  return 4.0 * c.hbar * t * Z / (c.M * den_b(t, c));
}

// squared moduli (with the normalization prefactors; they cancel in
// every velocity ratio)
double mod2_spin(double z, double t, double s, const DimConsts& c) {
  const double d = z - s * c.v * t;
  return std::exp(-2.0 * c.a * c.a * d * d / den_a(t, c)) / std::sqrt(den_a(t, c));
}
double mod2_pointer_moving(double z, double t, double s, const DimConsts& c) {
  const double d = z - s * c.V * t;
  return std::exp(-2.0 * c.b * c.b * d * d / den_b(t, c)) / std::sqrt(den_b(t, c));
}
double mod2_pointer_static(double z, double t, const DimConsts& c) {
  return std::exp(-2.0 * c.b * c.b * z * z / den_b(t, c)) / std::sqrt(den_b(t, c));
}

ModelParams random_params(Splitmix64& rng, std::int64_t n_max) {
  ModelParams p;
  p.v_prime = 2.0 + 8.0 * rng.uniform();
  p.V_prime = 6.0 * rng.uniform();
  p.eta = 0.5 + 1.5 * rng.uniform();
  p.n_pointer = 1 + static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(n_max));
  p.spin = SpinWeights::from_sigma(1.6 * rng.uniform() - 0.8);
  return p;
}

} // namespace

TEST_CASE("reduced field matches the dimensional fictitious-pointer dynamics") {
  Splitmix64 rng(313);
  for (int trial = 0; trial < 300; ++trial) {
    const ModelParams p = random_params(rng, 25);
    const DimConsts c = realize(p, 1.23, 2.7, 31.4, 0.83);
    const double sqrt_N = sqrt_n(p);

    const ReducedState s{0.8 * rng.uniform(), 3.0 * rng.uniform() - 1.5,
                         3.0 * rng.uniform() - 1.5, 3.0 * rng.uniform() - 1.5};

    // dimensional state
    const double t = c.m * c.a * c.a * s.t_prime / c.hbar;
    const double Q = c.a * s.q;
    const double Z1 = c.b * s.zhat1;
    const double Z2 = c.b * s.zhat2;

    // branch exponents relative to the shared envelope
    const double r1 = 4.0 * c.a * c.a * c.v * t * Q / den_a(t, c) +
                      4.0 * c.b * c.b * sqrt_N * c.V * t * Z1 / den_b(t, c);
    const double r2 = 4.0 * c.a * c.a * c.v * t * Q / den_a(t, c) +
                      4.0 * c.b * c.b * sqrt_N * c.V * t * Z2 / den_b(t, c);
    const double up = p.spin.w_plus * std::exp(r1);
    const double down = p.spin.w_minus * std::exp(-r2);
    const double dbar = up + down;

    // the fictitious pointers carry velocity sqrt(N) V
    const double drive_v = sqrt_N * c.V;
    const double dQdt = c.hbar / (c.m * dbar) *
                        (up * grad_S(Q, t, 1.0, c) + down * grad_S(Q, t, -1.0, c));
    const double dZ1dt = c.hbar / (c.M * dbar) *
                         (up * grad_xi_moving(Z1, t, 1.0, drive_v, c) +
                          down * grad_xi_static(Z1, t, c));
    const double dZ2dt = c.hbar / (c.M * dbar) *
                         (up * grad_xi_static(Z2, t, c) +
                          down * grad_xi_moving(Z2, t, -1.0, drive_v, c));

    // convert to dimensionless rates
    const double dq_dim = c.m * c.a * dQdt / c.hbar;
    const double dz1_dim = c.m * c.a * c.a * dZ1dt / (c.hbar * c.b);
    const double dz2_dim = c.m * c.a * c.a * dZ2dt / (c.hbar * c.b);

    const ReducedVelocity v = reduced_velocity(s, p);
    const double tol = 1e-9 * (1.0 + p.v_prime + p.eta * sqrt_N * p.V_prime);
    CHECK(std::abs(v.dq - dq_dim) <= tol);
    CHECK(std::abs(v.dz1 - dz1_dim) <= tol);
    CHECK(std::abs(v.dz2 - dz2_dim) <= tol);
  }
}

TEST_CASE("full field matches the dimensional per-particle dynamics") {
  Splitmix64 rng(314);
  for (int trial = 0; trial < 200; ++trial) {
    const ModelParams p = random_params(rng, 3);
    const DimConsts c = realize(p, 1.23, 2.7, 31.4, 0.83);
    const std::size_t n = static_cast<std::size_t>(p.n_pointer);

    FullState s;
    s.t_prime = 0.8 * rng.uniform();
    s.q = 3.0 * rng.uniform() - 1.5;
    s.z_p.resize(n);
    s.z_n.resize(n);
    for (double& z : s.z_p) z = 3.0 * rng.uniform() - 1.5;
    for (double& z : s.z_n) z = 3.0 * rng.uniform() - 1.5;

    const double t = c.m * c.a * c.a * s.t_prime / c.hbar;
    const double Q = c.a * s.q;
    std::vector<double> Zp(n), Zn(n);
    for (std::size_t i = 0; i < n; ++i) Zp[i] = c.b * s.z_p[i];
    for (std::size_t i = 0; i < n; ++i) Zn[i] = c.b * s.z_n[i];

    // the two branch densities as literal products of squared moduli
    double up = p.spin.w_plus * mod2_spin(Q, t, 1.0, c);
    double down = p.spin.w_minus * mod2_spin(Q, t, -1.0, c);
    for (std::size_t i = 0; i < n; ++i) {
      up *= mod2_pointer_moving(Zp[i], t, 1.0, c) * mod2_pointer_static(Zn[i], t, c);
      down *= mod2_pointer_static(Zp[i], t, c) * mod2_pointer_moving(Zn[i], t, -1.0, c);
    }
    const double dbar = up + down;
    REQUIRE(dbar > 0.0);

    const double dq_dim =
        c.m * c.a / c.hbar *
        (c.hbar / (c.m * dbar) *
         (up * grad_S(Q, t, 1.0, c) + down * grad_S(Q, t, -1.0, c)));

    const FullVelocity v = full_velocity(s, p);
    const double tol = 1e-9 * (1.0 + p.v_prime + p.eta * p.V_prime);
    CHECK(std::abs(v.dq - dq_dim) <= tol);

    for (std::size_t i = 0; i < n; ++i) {
      const double dZp = c.hbar / (c.M * dbar) *
                         (up * grad_xi_moving(Zp[i], t, 1.0, c.V, c) +
                          down * grad_xi_static(Zp[i], t, c));
      const double dZn = c.hbar / (c.M * dbar) *
                         (up * grad_xi_static(Zn[i], t, c) +
                          down * grad_xi_moving(Zn[i], t, -1.0, c.V, c));
      CHECK(std::abs(v.dz_p[i] - c.m * c.a * c.a * dZp / (c.hbar * c.b)) <= tol);
      CHECK(std::abs(v.dz_n[i] - c.m * c.a * c.a * dZn / (c.hbar * c.b)) <= tol);
    }
  }
}
