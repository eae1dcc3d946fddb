#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "thermowire/model.hpp"

using namespace thermowire;

TEST_CASE("bose factor limits and frozen values") {
  CHECK(bose_factor(0.0) == 1.0);
  CHECK(bose_factor(1.0) == doctest::Approx(0.581976706869).epsilon(1e-10));
  // high-precision oracle value of 50/(e^50 - 1)
  CHECK(bose_factor(50.0) ==
        doctest::Approx(9.64374923982e-21).epsilon(1e-9));
  CHECK(bose_factor(1e4) == 0.0);  // graceful underflow
}

TEST_CASE("bose factor matches its small-y series") {
  for (double y : {1e-8, 1e-4, 1e-2}) {
    const double series = 1.0 - y / 2.0 + y * y / 12.0;
    CHECK(bose_factor(y) == doctest::Approx(series).epsilon(1e-10));
  }
}

TEST_CASE("bose factor is monotone decreasing") {
  double prev = bose_factor(0.0);
  for (double y = 0.1; y < 60.0; y += 0.7) {
    const double cur = bose_factor(y);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("bose factor rejects bad input") {
  CHECK_THROWS_AS(bose_factor(-1.0), DomainError);
  CHECK_THROWS_AS(bose_factor(std::nan("")), DomainError);
  CHECK_THROWS_AS(bose_factor(std::numeric_limits<double>::infinity()),
                  DomainError);
}

TEST_CASE("response denominator, no capacitance") {
  ReducedParams p;
  p.omega_r = 2.0;
  p.m = 0.0;
  p.t = 1.0;
  // at omega = omega_r with m = 0: (w_r - i w_r)^2 = -2 i w_r^2
  const auto d = response_denominator(2.0, p);
  CHECK(d.real() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(d.imag() == doctest::Approx(-8.0));

  ReducedParams q;
  q.omega_r = 0.5;
  q.m = 0.8;
  q.t = 1.0;
  const auto d2 = response_denominator(1.0, q);
  CHECK(d2.real() == doctest::Approx(-0.11));
  CHECK(d2.imag() == doctest::Approx(-1.0));
}

TEST_CASE("response denominator with capacitance") {
  ReducedParams p;
  p.omega_r = 0.0;
  p.m = 0.0;
  p.omega_c = 1.0;
  p.t = 1.0;
  // exact resonance: reactive term cancels
  const auto d = response_denominator(1.0, p);
  CHECK(std::abs(d) == doctest::Approx(0.0).epsilon(1e-14));

  // the only zero on (0, inf) is omega = omega_c
  for (double w : {0.3, 0.7, 1.3, 2.0, 5.0}) {
    CHECK(std::abs(response_denominator(w, p)) > 1e-3);
  }
}

TEST_CASE("Im D = -2 w_r (w - w_c^2/w)") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int i = 0; i < 200; ++i) {
    ReducedParams p;
    p.omega_r = u(rng);
    p.m = u(rng) / 4.0;
    p.omega_c = u(rng);
    p.t = 1.0;
    const double w = u(rng);
    const double expected =
        -2.0 * p.omega_r * (w - *p.omega_c * *p.omega_c / w);
    CHECK(response_denominator(w, p).imag() ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("response denominator rejects omega <= 0") {
  ReducedParams p;
  p.t = 1.0;
  CHECK_THROWS_AS(response_denominator(0.0, p), DomainError);
  CHECK_THROWS_AS(response_denominator(-1.0, p), DomainError);
}

TEST_CASE("to_reduced definitions") {
  PhysicalParams p;
  p.inductance = 1.0;
  p.mutual_inductance = 0.8;
  p.resistance = 1.0;
  p.temperature = constants::hbar * 1.0 / constants::k_boltzmann;  // k_B T = hbar w_R
  const auto r = to_reduced(p);
  CHECK(r.reduced.m == doctest::Approx(0.8));
  CHECK(r.reduced.omega_r == doctest::Approx(1.0));
  CHECK(r.reduced.t == doctest::Approx(1.0));
  CHECK(!r.reduced.omega_c);

  PhysicalParams q;
  q.inductance = 1.0;
  q.capacitance = 1.0;
  const auto r2 = to_reduced(q);
  CHECK(r2.reduced.m == 0.0);
  CHECK(r2.reduced.omega_r == 0.0);
  CHECK(*r2.reduced.omega_c == doctest::Approx(1.0));
  CHECK(r2.reduced.t == 0.0);

  PhysicalParams w;
  w.inductance = 2.0;
  w.mutual_inductance = 1.0;
  w.resistance = 4.0;
  w.capacitance = 0.125;
  const auto r3 = to_reduced(w);
  CHECK(r3.omega_ref == doctest::Approx(2.0));  // 1/sqrt(2*0.125)
  CHECK(r3.reduced.m == doctest::Approx(0.5));
  CHECK(*r3.reduced.omega_c == doctest::Approx(1.0));
  CHECK(r3.reduced.omega_r == doctest::Approx(1.0));
}

TEST_CASE("to_reduced error paths") {
  PhysicalParams p;
  p.inductance = 1.0;
  p.mutual_inductance = 1.0;
  CHECK_THROWS_AS(to_reduced(p), CouplingBoundError);

  PhysicalParams q;
  q.inductance = 1.0;  // R = 0, no C: no scale
  CHECK_THROWS_AS(to_reduced(q), DomainError);
  CHECK_NOTHROW(to_reduced(q, 5.0));  // explicit override
}

TEST_CASE("round trip to_reduced/from_reduced") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    PhysicalParams p;
    p.inductance = std::exp(u(rng) * 10.0 - 5.0);
    p.mutual_inductance = (2.0 * u(rng) - 1.0) * 0.95 * p.inductance;
    p.resistance = std::exp(u(rng) * 6.0 - 3.0);
    if (u(rng) < 0.5) p.capacitance = std::exp(u(rng) * 6.0 - 3.0);
    p.temperature = u(rng) * 300.0;
    const auto r = to_reduced(p);
    const PhysicalParams back =
        from_reduced(r.reduced, r.omega_ref, p.inductance);
    CHECK(back.mutual_inductance ==
          doctest::Approx(p.mutual_inductance).epsilon(1e-12));
    CHECK(back.resistance == doctest::Approx(p.resistance).epsilon(1e-12));
    CHECK(back.temperature == doctest::Approx(p.temperature).epsilon(1e-12));
    if (p.capacitance) {
      CHECK(*back.capacitance == doctest::Approx(*p.capacitance).epsilon(1e-12));
    }
  }
}
