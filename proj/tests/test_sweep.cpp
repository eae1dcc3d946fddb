#include <cmath>
#include <sstream>

#include <doctest.h>

#include "thermowire/asymptotics.hpp"
#include "thermowire/sweep.hpp"

using namespace thermowire;

TEST_CASE("grid generation") {
  SweepSpec spec;
  spec.from = 1.0;
  spec.to = 3.0;
  spec.points = 2;
  spec.base.t = 1.0;
  const auto grid = sweep_grid(spec);
  REQUIRE(grid.size() == 2);
  CHECK(grid[0] == 1.0);
  CHECK(grid[1] == 3.0);

  spec.log_scale = true;
  spec.points = 3;
  const auto lg = sweep_grid(spec);
  CHECK(lg[1] == doctest::Approx(std::sqrt(3.0)));

  spec.from = -1.0;
  CHECK_THROWS_AS(sweep_grid(spec), DomainError);
}

TEST_CASE("classical m-sweep matches the closed form") {
  SweepSpec spec;
  spec.variable = SweepSpec::Variable::kM;
  spec.from = 0.0;
  spec.to = 0.9;
  spec.points = 10;
  spec.base.omega_r = 1.0;
  spec.base.t = 1e6;
  const auto rows = run_sweep(spec, {Quantity::kH}, 0.0, {});
  const auto grid = sweep_grid(spec);
  for (size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].failure.empty());
    CHECK(rows[i].values[0].value ==
          doctest::Approx(asymptotics::h_classical(grid[i])).epsilon(1e-4));
  }
}

TEST_CASE("capacitive omega_r sweep approaches the zero-resistance limit") {
  SweepSpec spec;
  spec.variable = SweepSpec::Variable::kOmegaR;
  spec.from = 1e-6;
  spec.to = 1.0;
  spec.points = 7;
  spec.log_scale = true;
  spec.base.m = 0.8;
  spec.base.omega_c = 1.0;
  spec.base.t = 0.1;
  const auto rows = run_sweep(spec, {Quantity::kH}, 0.0, {});
  REQUIRE(rows.size() == 7);
  // limit value from independent high-precision quadrature
  CHECK(rows[0].values[0].value == doctest::Approx(-7.501521e-4).epsilon(1e-3));
  // already saturated between the two smallest omega_r
  CHECK(rows[1].values[0].value ==
        doctest::Approx(rows[0].values[0].value).epsilon(1e-2));
  // everywhere suppressed far below the no-capacitance classical value
  for (const auto& row : rows) {
    CHECK(std::abs(row.values[0].value) < 0.1 * asymptotics::h_classical(0.8));
  }
}

TEST_CASE("per-point failures do not abort the sweep") {
  SweepSpec spec;
  spec.variable = SweepSpec::Variable::kM;
  spec.from = 0.5;
  spec.to = 1.5;  // crosses the coupling bound
  spec.points = 5;
  spec.base.omega_r = 1.0;
  spec.base.t = 1.0;
  const auto rows = run_sweep(spec, {Quantity::kH}, 0.0, {});
  REQUIRE(rows.size() == 5);
  CHECK(rows.front().failure.empty());
  CHECK(!rows.back().failure.empty());
  CHECK(std::isnan(rows.back().values[0].value));
}

TEST_CASE("CSV output is bit-stable and carries error columns") {
  SweepSpec spec;
  spec.variable = SweepSpec::Variable::kT;
  spec.from = 0.5;
  spec.to = 1.0;
  spec.points = 3;
  spec.base.m = 0.5;
  spec.base.omega_r = 1.0;
  const auto grid = sweep_grid(spec);

  std::ostringstream a, b;
  write_csv(a, "t", grid, {Quantity::kH}, run_sweep(spec, {Quantity::kH}, 0.0, {}));
  write_csv(b, "t", grid, {Quantity::kH}, run_sweep(spec, {Quantity::kH}, 0.0, {}));
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, a.str().find('\n')) == "t,H,H_err,error");
  // LF endings only
  CHECK(a.str().find('\r') == std::string::npos);
}

TEST_CASE("worker count does not change results") {
  SweepSpec spec;
  spec.variable = SweepSpec::Variable::kT;
  spec.from = 0.2;
  spec.to = 2.0;
  spec.points = 8;
  spec.base.m = 0.6;
  spec.base.omega_r = 1.0;
  const auto serial = run_sweep(spec, {Quantity::kH, Quantity::kFInt}, 0.0, {}, 1);
  const auto parallel = run_sweep(spec, {Quantity::kH, Quantity::kFInt}, 0.0, {}, 4);
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].values[0].value == parallel[i].values[0].value);
    CHECK(serial[i].values[1].value == parallel[i].values[1].value);
  }
}

TEST_CASE("fig1 defaults") {
  const SweepSpec spec = fig1_spec();
  CHECK(spec.base.m == 0.8);
  CHECK(*spec.base.omega_c == 1.0);
  CHECK(spec.points == 400);
  CHECK(spec.log_scale);
  CHECK(spec.resistance.kind == ResistanceModel::Kind::kPowerLaw);
  CHECK(spec.resistance.omega_r_at(0.5, 0.0) == doctest::Approx(1.25));
}
