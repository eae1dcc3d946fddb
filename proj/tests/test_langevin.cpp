#include <cmath>

#include <doctest.h>

#include "thermowire/langevin.hpp"
#include "thermowire/model.hpp"

using namespace thermowire;

TEST_CASE("equipartition covariance") {
  const auto c0 = equipartition_covariance(2.0, 0.0, 3.0);
  CHECK(c0[0][0] == doctest::Approx(1.5));
  CHECK(c0[0][1] == 0.0);
  CHECK(c0[1][1] == doctest::Approx(1.5));

  const auto c = equipartition_covariance(1.0, 0.8, 1.0);
  CHECK(c[0][1] == doctest::Approx(-0.8 / 0.36).epsilon(1e-12));
  CHECK(c[0][0] == doctest::Approx(1.0 / 0.36).epsilon(1e-12));
  CHECK(c[0][0] == c[1][1]);  // identical wires

  CHECK_THROWS_AS(equipartition_covariance(1.0, 1.0, 1.0), CouplingBoundError);
}

TEST_CASE("config validation") {
  SimConfig c;
  c.dt = 5.0;  // violates dt < 0.1 L/R for L=1, R=0.1
  CHECK_THROWS_AS(c.validate(), DomainError);

  SimConfig short_run;
  short_run.n_steps = 100;
  CHECK_THROWS_AS(short_run.validate(), DomainError);
}

TEST_CASE("decoupled wires have vanishing correlator") {
  SimConfig c;
  c.mutual_inductance = 0.0;
  c.resistance = 0.5;
  c.dt = 0.05;
  c.n_steps = 200'000;
  c.n_replicas = 4;
  c.seed = 11;
  const LangevinEstimate est = simulate_correlator(c);
  CHECK(std::abs(est.corr_12) < 3.0 * est.stderr_corr);
  CHECK(est.var_1 > 0.0);
  CHECK(est.stderr_corr > 0.0);
}

TEST_CASE("correlator matches the equipartition oracle") {
  SimConfig c;
  c.mutual_inductance = 0.8;
  c.resistance = 0.1;
  c.dt = 0.01;
  c.n_steps = 2'000'000;
  c.n_replicas = 8;
  c.seed = 42;
  const LangevinEstimate est = simulate_correlator(c);
  const double target = -0.8 / 0.36;
  CHECK(std::abs(est.corr_12 - target) < 3.0 * est.stderr_corr);
  CHECK(est.corr_12 == doctest::Approx(target).epsilon(0.05));
  CHECK(est.var_1 == doctest::Approx(1.0 / 0.36).epsilon(0.05));
}

TEST_CASE("determinism: identical seed gives identical estimates") {
  SimConfig c;
  c.mutual_inductance = 0.4;
  c.resistance = 0.5;
  c.dt = 0.05;
  c.n_steps = 100'000;
  c.n_replicas = 4;
  c.seed = 7;
  const LangevinEstimate a = simulate_correlator(c);
  const LangevinEstimate b = simulate_correlator(c);
  CHECK(a.corr_12 == b.corr_12);
  CHECK(a.var_1 == b.var_1);
  CHECK(a.stderr_corr == b.stderr_corr);

  c.seed = 8;
  const LangevinEstimate d = simulate_correlator(c);
  CHECK(a.corr_12 != d.corr_12);
}

TEST_CASE("standard error scales like 1/sqrt(n)") {
  SimConfig c;
  c.mutual_inductance = 0.4;
  c.resistance = 0.5;
  c.dt = 0.05;
  c.n_replicas = 4;
  c.seed = 5;
  double prev = 0.0;
  for (std::int64_t n : {100'000, 400'000, 1'600'000}) {
    c.n_steps = n;
    const LangevinEstimate est = simulate_correlator(c);
    if (prev > 0.0) {
      const double ratio = prev / est.stderr_corr;  // expect ~2
      CHECK(ratio > 2.0 / 1.5);
      CHECK(ratio < 2.0 * 1.5);
    }
    prev = est.stderr_corr;
  }
}

TEST_CASE("halving dt leaves the correlator within its error") {
  SimConfig c;
  c.mutual_inductance = 0.6;
  c.resistance = 0.2;
  c.dt = 0.04;
  c.n_steps = 2'000'000;
  c.n_replicas = 8;
  c.seed = 31;
  const LangevinEstimate coarse = simulate_correlator(c);
  c.dt = 0.02;
  const LangevinEstimate fine = simulate_correlator(c);
  CHECK(std::abs(coarse.corr_12 - fine.corr_12) <
        coarse.stderr_corr + fine.stderr_corr);
}

TEST_CASE("oracle force sign algebra") {
  SimConfig c;
  c.mutual_inductance = 0.8;
  c.resistance = 0.5;
  c.dt = 0.05;
  c.n_steps = 400'000;
  c.n_replicas = 4;
  c.seed = 13;

  const auto zero = oracle_force(c, {0.0, 0.0, 0.0});
  CHECK(zero[0] == 0.0);

  // M > 0 decreasing along +x: repulsive, force component positive
  const auto f = oracle_force(c, {-0.01, 0.0, 0.0});
  CHECK(f[0] > 0.0);
  CHECK(f[1] == 0.0);
  const double expected = 1.0 * 0.8 * 0.01 / 0.36;  // kT M g / (L^2 - M^2)
  CHECK(f[0] == doctest::Approx(expected).epsilon(0.1));
}
