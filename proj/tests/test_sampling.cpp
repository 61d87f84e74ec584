#include <cmath>

#include <doctest.h>

#include "bohm/full_field.hpp"
#include "bohm/sampling.hpp"

using namespace bohm;

namespace {

ModelParams params_n(std::int64_t n) {
  ModelParams p;
  p.n_pointer = n;
  return p;
}

} // namespace

TEST_CASE("grid_initial_positions") {
  SUBCASE("41 points over +-1.5") {
    const std::vector<double> g = grid_initial_positions(41, 1.5);
    REQUIRE(g.size() == 41);
    CHECK(g.front() == -1.5);
    CHECK(g.back() == 1.5);
    CHECK(g[20] == 0.0);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
      CHECK(g[i + 1] - g[i] == doctest::Approx(0.075).epsilon(1e-12));
    }
  }
  SUBCASE("single point is the midpoint") {
    CHECK(grid_initial_positions(1, 1.5) == std::vector<double>{0.0});
  }
  SUBCASE("three points") {
    CHECK(grid_initial_positions(3, 1.0) == std::vector<double>{-1.0, 0.0, 1.0});
  }
  SUBCASE("exactly symmetric under negation") {
    for (int n : {2, 5, 41, 100}) {
      const std::vector<double> g = grid_initial_positions(n, 1.7);
      for (int i = 0; i < n; ++i) {
        CHECK(g[static_cast<std::size_t>(i)] ==
              -g[static_cast<std::size_t>(n - 1 - i)]);
      }
    }
  }
  SUBCASE("rejects bad arguments") {
    CHECK_THROWS_AS(grid_initial_positions(0, 1.0), RangeError);
    CHECK_THROWS_AS(grid_initial_positions(5, 0.0), RangeError);
  }
}

TEST_CASE("equilibrium sample statistics") {
  const std::int64_t n = 100000;
  const std::vector<ReducedState> samples = sample_equilibrium(params_n(1), 99, n);
  REQUIRE(samples.size() == static_cast<std::size_t>(n));

  double mean_q = 0.0, var_z1 = 0.0, mean_z1 = 0.0;
  for (const ReducedState& s : samples) {
    CHECK(s.t_prime == 0.0);
    mean_q += s.q;
    mean_z1 += s.zhat1;
  }
  mean_q /= static_cast<double>(n);
  mean_z1 /= static_cast<double>(n);
  for (const ReducedState& s : samples) {
    var_z1 += (s.zhat1 - mean_z1) * (s.zhat1 - mean_z1);
  }
  var_z1 /= static_cast<double>(n - 1);

  // sd of the mean is 0.5/sqrt(1e5) ~ 0.0016; three sigma ~ 0.005
  CHECK(std::abs(mean_q) < 0.005);
  CHECK(std::abs(var_z1 - 0.25) < 0.01);
}

TEST_CASE("equilibrium sampling is seed deterministic") {
  const std::vector<ReducedState> a = sample_equilibrium(params_n(1), 1234, 50);
  const std::vector<ReducedState> b = sample_equilibrium(params_n(1), 1234, 50);
  CHECK(a == b);
  const std::vector<ReducedState> c = sample_equilibrium(params_n(1), 1235, 50);
  CHECK(a != c);
}

TEST_CASE("substreams make prefixes consistent") {
  // run i of a count-m batch equals run i of a count-k batch, k < m
  const std::vector<ReducedState> big = sample_equilibrium(params_n(1), 7, 20);
  const std::vector<ReducedState> small = sample_equilibrium(params_n(1), 7, 5);
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(big[i] == small[i]);
}

TEST_CASE("full equilibrium sample") {
  const ModelParams p = params_n(4);
  const FullState a = full_equilibrium_sample(p, 42);
  const FullState b = full_equilibrium_sample(p, 42);
  CHECK(a == b);
  REQUIRE(a.z_p.size() == 4);
  REQUIRE(a.z_n.size() == 4);

  // aggregated variance: Zhat = (1/sqrt(N)) sum Z has variance 0.25
  double acc = 0.0, acc2 = 0.0;
  const int trials = 4000;
  for (int i = 0; i < trials; ++i) {
    const FullState s = full_equilibrium_sample(p, 1000 + static_cast<std::uint64_t>(i));
    const double zhat = reduce_full_state(s).zhat1;
    acc += zhat;
    acc2 += zhat * zhat;
  }
  const double mean = acc / trials;
  const double var = acc2 / trials - mean * mean;
  CHECK(std::abs(var - 0.25) < 0.03);
}

TEST_CASE("initial_conditions dispatch") {
  ModelParams p = params_n(1);

  InitialConditionSpec grid;
  grid.mode = IcMode::grid;
  grid.q0_values = grid_initial_positions(5, 1.0);
  grid.zhat1_0 = 0.2;
  grid.zhat2_0 = 0.1;
  const std::vector<ReducedState> g = initial_conditions(p, grid);
  REQUIRE(g.size() == 5);
  CHECK(g[0] == ReducedState{0.0, -1.0, 0.2, 0.1});
  CHECK(g[4] == ReducedState{0.0, 1.0, 0.2, 0.1});

  InitialConditionSpec eq;
  eq.mode = IcMode::equilibrium;
  eq.count = 3;
  eq.seed = 5;
  CHECK(initial_conditions(p, eq).size() == 3);

  InitialConditionSpec bad;
  bad.mode = IcMode::equilibrium;
  bad.count = 0;
  CHECK_THROWS_AS(initial_conditions(p, bad), RangeError);

  InitialConditionSpec empty;
  empty.mode = IcMode::fixed;
  CHECK_THROWS_AS(initial_conditions(p, empty), RangeError);
}
