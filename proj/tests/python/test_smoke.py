import math

import pytest

import _thermowire as tw


def test_bose_factor():
    assert tw.bose_factor(0.0) == 1.0
    assert tw.bose_factor(1.0) == pytest.approx(1.0 / math.expm1(1.0), rel=1e-12)
    assert tw.bose_factor(1e4) == 0.0


def test_h_factor_matches_classical_limit():
    p = tw.ReducedParams(m=0.8, omega_r=1.0, t=1e6)
    h = tw.h_factor(p)
    assert h.value == pytest.approx(tw.h_classical(0.8), rel=1e-4)
    assert h.abs_error_estimate < 1e-6


def test_domain_error_maps_to_value_error():
    with pytest.raises(ValueError):
        tw.ReducedParams(m=1.5, omega_r=1.0, t=1.0)


def test_reduced_round_trip():
    phys = tw.PhysicalParams(
        inductance=1e-5,
        mutual_inductance=4e-6,
        resistance=0.5,
        capacitance=1e-9,
        temperature=300.0,
    )
    reduced, omega_ref = tw.to_reduced(phys)
    assert reduced.m == pytest.approx(0.4, rel=1e-12)
    back = tw.from_reduced(reduced, omega_ref, phys.inductance)
    assert back.resistance == pytest.approx(0.5, rel=1e-10)
    assert back.temperature == pytest.approx(300.0, rel=1e-10)


def test_langevin_small_run():
    c = tw.SimConfig()
    c.mutual_inductance = 0.8
    c.resistance = 0.5
    c.dt = 0.005
    c.n_steps = 200_000
    c.n_replicas = 4
    c.seed = 9
    est = tw.simulate_correlator(c)
    target = tw.equipartition_covariance(1.0, 0.8, 1.0)[0][1]
    assert abs(est.corr_12 - target) < 4.0 * est.stderr_corr
    assert est.rng_algorithm


def test_geometry_loops():
    n = 96
    pts = [
        [math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n), 0.0]
        for i in range(n)
    ]
    loop = tw.Polyline3(pts, closed=True)
    d = 5.0
    mi = tw.neumann_mutual_inductance(loop, loop, [0.0, 0.0, d])
    # Maxwell's closed form for two coaxial unit loops
    from scipy.special import ellipe, ellipk

    mu0 = 1.25663706212e-6
    k = math.sqrt(4.0 / (4.0 + d * d))
    exact = mu0 * ((2.0 / k - k) * ellipk(k * k) - (2.0 / k) * ellipe(k * k))
    assert mi.mutual == pytest.approx(exact, rel=0.005)


def test_validation_subset():
    results = tw.run_validation(filter="classical-h")
    assert len(results) == 1
    assert results[0]["passed"]
