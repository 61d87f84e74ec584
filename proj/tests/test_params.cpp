#include <doctest.h>

#include "bohm/params.hpp"

using namespace bohm;

namespace {

ModelParams base_params() {
  ModelParams p;
  p.v_prime = 10.0;
  p.V_prime = 10.0;
  p.eta = 1.0;
  p.n_pointer = 1;
  p.spin = {0.5, 0.5};
  return p;
}

} // namespace

TEST_CASE("validate_params accepts the figure-level parameter set") {
  ModelParams p = base_params();
  CHECK(validate_params(p) == p);

  // fully polarized edge case
  p.spin = {1.0, 0.0};
  CHECK(validate_params(p) == p);
  CHECK(polarization(p.spin) == 1.0);
}

TEST_CASE("validate_params rejects bad normalization and ranges") {
  ModelParams p = base_params();
  p.spin = {0.6, 0.5};
  CHECK_THROWS_AS(validate_params(p), NormalizationError);

  p = base_params();
  p.spin = {-0.1, 1.1};
  CHECK_THROWS_AS(validate_params(p), RangeError);

  p = base_params();
  p.v_prime = 0.0;
  CHECK_THROWS_AS(validate_params(p), RangeError);

  p = base_params();
  p.V_prime = -1.0;
  CHECK_THROWS_AS(validate_params(p), RangeError);

  p = base_params();
  p.eta = 0.0;
  CHECK_THROWS_AS(validate_params(p), RangeError);

  p = base_params();
  p.n_pointer = 0;
  CHECK_THROWS_AS(validate_params(p), RangeError);
}

TEST_CASE("validate_params is idempotent") {
  const ModelParams p = base_params();
  CHECK(validate_params(validate_params(p)) == validate_params(p));
}

TEST_CASE("rapidity") {
  ModelParams p = base_params();
  CHECK(rapidity(p) == 1.0);

  p.V_prime = 0.0;
  CHECK(rapidity(p) == 0.0);

  p = base_params();
  p.eta = 0.5;
  p.V_prime = 20.0;
  p.v_prime = 5.0;
  p.n_pointer = 4;
  CHECK(rapidity(p) == 2.0);
  CHECK(effective_rapidity(p) == 4.0);
}

TEST_CASE("rapidity is homogeneous in V_prime") {
  ModelParams p = base_params();
  p.V_prime = 3.7;
  const double e0 = rapidity(p);
  for (double k : {2.0, 4.0, 0.5, 0.125}) {
    ModelParams q = p;
    q.V_prime = k * p.V_prime;
    CHECK(rapidity(q) == k * e0); // exact for power-of-two factors
  }
}

TEST_CASE("polarization") {
  CHECK(polarization({0.5, 0.5}) == 0.0);
  CHECK(polarization({0.75, 0.25}) == 0.5);
  CHECK(polarization({0.505, 0.495}) == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("polarization is antisymmetric under weight swap") {
  for (int i = 0; i <= 20; ++i) {
    const double w = i / 20.0;
    CHECK(polarization({w, 1.0 - w}) + polarization({1.0 - w, w}) == 0.0);
  }
}

TEST_CASE("from_sigma recovers the weights") {
  const SpinWeights s = SpinWeights::from_sigma(0.5);
  CHECK(s.w_plus == 0.75);
  CHECK(s.w_minus == 0.25);
  CHECK(SpinWeights::from_sigma(0.0).w_plus == 0.5);
}
