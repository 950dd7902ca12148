"""Special-function values against frozen high-precision references."""

from __future__ import annotations

import math

import pytest

from schlomilch import specfun as sf

SQRT_PI = math.sqrt(math.pi)


def rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b)


@pytest.mark.parametrize(
    "x, expected",
    [(0.5, SQRT_PI), (1.0, 1.0), (5.0, 24.0), (10.5, 1133278.3889487855), (170.0, 4.269068009004705e304)],
)
def test_gamma_values(x, expected):
    assert rel(sf.gamma(x), expected) <= 1e-12


def test_gamma_matches_math_on_grid():
    worst = max(rel(sf.gamma(i / 10), math.gamma(i / 10)) for i in range(1, 1701))
    assert worst <= 1e-12


def test_gamma_errors():
    with pytest.raises(sf.DomainError):
        sf.gamma(0.0)
    with pytest.raises(sf.DomainError):
        sf.gamma(-1.5)
    with pytest.raises(sf.RangeError):
        sf.gamma(170.5)
    assert issubclass(sf.RangeError, ValueError)


def test_log_gamma_and_beta():
    assert math.isclose(sf.log_gamma(1000.0), math.lgamma(1000.0), rel_tol=1e-13)
    assert abs(sf.log_gamma(1.0)) < 1e-15
    assert math.isclose(sf.beta(0.5, 0.5), math.pi, rel_tol=1e-14)
    assert math.isclose(sf.beta(200.0, 0.5), math.exp(math.lgamma(200) + math.lgamma(0.5) - math.lgamma(200.5)), rel_tol=1e-11)
    with pytest.raises(sf.DomainError):
        sf.beta(0.0, 1.0)


def test_pochhammer():
    assert sf.pochhammer(0.5, 0) == 1.0
    assert sf.pochhammer(1.0, 5) == 120.0
    assert math.isclose(sf.pochhammer(0.25, 3), 0.25 * 1.25 * 2.25)


def test_duplication_formula():
    for i in range(25, 2001, 5):
        x = i / 100
        rhs = 2 ** (2 * x - 1) / SQRT_PI * sf.gamma(x) * sf.gamma(x + 0.5)
        assert rel(sf.gamma(2 * x), rhs) <= 1e-11


def test_bessel_basic():
    assert sf.bessel_i(0, 0.0) == 1.0
    assert sf.bessel_i(1, 0.0) == 0.0
    assert sf.bessel_j(1, 0.0) == 0.0
    assert math.isclose(sf.bessel_i(0, 1.0) + sf.bessel_i(1, 1.0), 1.8312249817444934, rel_tol=1e-13)


@pytest.mark.parametrize(
    "order, x, expected",
    [
        (0, 2.5, -0.048383776468197996),
        (1, 2.5, 0.4970941024642741),
        (0, 12.0, 0.04768931079683354),
        (1, 25.0, -0.1253502495802899),
    ],
)
def test_bessel_j_values(order, x, expected):
    assert abs(sf.bessel_j(order, x) - expected) <= 1e-13


def test_bessel_i_large():
    assert math.isclose(sf.bessel_i(0, 30.0), 781672297823.9775, rel_tol=1e-12)
    assert math.isclose(sf.bessel_i(1, -3.0), -3.953370217402609, rel_tol=1e-13)


def test_bessel_guards():
    with pytest.raises(sf.RangeError):
        sf.bessel_i(0, 30.5)
    with pytest.raises(sf.DomainError):
        sf.bessel_j(2, 1.0)


def test_bessel_doubled_precision_square():
    # I0(x)^2 recomputed from the decimal series
    from schlomilch._pykernels import _bessel_series_decimal

    for x in (0.3, 1.0, 4.0, 9.0):
        ref = _bessel_series_decimal(0, x, True)
        assert math.isclose(sf.bessel_i(0, x) ** 2, ref * ref, rel_tol=1e-12)


def test_erf():
    assert sf.erf(0.0) == 0.0
    assert math.isclose(sf.erf(2.0), 0.9953222650189527, rel_tol=1e-14)
    for x in (0.1, 0.7, 2.4, 2.6, 5.0, 30.0):
        assert sf.erf(-x) == -sf.erf(x)
        assert math.isclose(sf.erf(x), math.erf(x), rel_tol=1e-13)
        assert abs(sf.erf(x)) <= 1.0
    assert math.isclose(sf.erfc(6.0), math.erfc(6.0), rel_tol=1e-12)


def test_sine_integral():
    assert sf.sine_integral(0.0) == 0.0
    assert abs(sf.sine_integral(0.5) - 0.49310741804306674) <= 1e-13
    assert abs(sf.sine_integral(8.0) - 1.5741868217069421) <= 1e-13
    assert sf.sine_integral(-3.0) == -sf.sine_integral(3.0)
    with pytest.raises(sf.RangeError):
        sf.sine_integral(8.5)


def test_zeta_family():
    assert math.isclose(sf.zeta(2.0), math.pi**2 / 6, rel_tol=1e-13)
    assert math.isclose(sf.eta(1.0), math.log(2.0), rel_tol=1e-13)
    assert math.isclose(sf.zeta(0.5), -1.4603545088095868, rel_tol=1e-12)
    assert math.isclose(sf.zeta(3.0), 1.2020569031595942, rel_tol=1e-13)
    assert math.isclose(sf.zeta(30.0), 1.0000000009313274, rel_tol=1e-14)
    with pytest.raises(sf.DomainError):
        sf.zeta(1.0)
    with pytest.raises(sf.DomainError):
        sf.eta(0.05)


def test_zeta_eta_consistency():
    for s in (0.2, 0.9, 1.5, 4.0, 12.0):
        assert math.isclose(sf.zeta(s) * (1 - 2 ** (1 - s)), sf.eta(s), rel_tol=1e-14)


def test_lambda_cap_continuous_at_one():
    assert math.isclose(sf.lambda_cap(1.0), math.log(2) / 2, rel_tol=1e-14)
    grid = [0.99 + i * 1e-3 for i in range(21)]
    vals = [sf.lambda_cap(s) for s in grid]
    assert all(math.isfinite(v) for v in vals)
    assert max(abs(b - a) for a, b in zip(vals, vals[1:])) < 1e-3


def test_elliptic():
    assert math.isclose(sf.elliptic_k(0.0), math.pi / 2, rel_tol=1e-15)
    assert math.isclose(sf.elliptic_k(0.5), 1.685750354812596, rel_tol=1e-13)
    for k in (0.1, 0.5, 0.9, 0.999):
        assert math.isclose(sf.elliptic_f(math.pi / 2, k), sf.elliptic_k(k), rel_tol=1e-14)
    with pytest.raises(sf.DomainError):
        sf.elliptic_k(1.0)


def test_elliptic_f_monotone():
    phis = [i * math.pi / 40 for i in range(21)]
    ks = [i / 20 for i in range(20)]
    for k in ks:
        vals = [sf.elliptic_f(p, k) for p in phis]
        assert all(b > a for a, b in zip(vals, vals[1:]))
    for p in phis[1:]:
        vals = [sf.elliptic_f(p, k) for k in ks]
        assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_hyp2f3():
    assert sf.hyp2f3(0.3, 0.7, 1.1, 2.2, 3.3, 0.0) == 1.0
    ref = sum(
        (-1) ** k * math.comb(4 * k, 2 * k) / math.factorial(2 * k + 1) * (1 / 8) ** (2 * k)
        for k in range(30)
    )
    got = sf.hyp2f3(0.25, 0.75, 0.5, 1.0, 1.5, -4 / 64)
    assert abs(got - ref) <= 1e-12
    assert math.isclose(got, 0.9845167181130682, rel_tol=1e-14)
    with pytest.raises(sf.DomainError):
        sf.hyp2f3(1, 1, -2.0, 1, 1, 0.5)
    with pytest.raises(sf.RangeError):
        sf.hyp2f3(1, 1, 1, 1, 1, 101.0)


@pytest.mark.parametrize(
    "name, args",
    [
        ("gamma", (170.0,)),
        ("gamma", (0.01,)),
        ("bessel_j", (0, 9.9)),
        ("bessel_j", (1, 29.0)),
        ("bessel_i", (0, 30.0)),
        ("sine_integral", (8.0,)),
        ("zeta", (0.999,)),
        ("eta", (0.1,)),
        ("lambda_cap", (1.0,)),
        ("elliptic_k", (0.99,)),
        ("erf", (0.3,)),
        ("hyp2f3", (0.25, 0.75, 0.5, 1.0, 1.5, -50.0)),
    ],
)
def test_special_value_bound(name, args):
    sv = sf.evaluate(name, *args)
    assert 0.0 <= sv.abs_error <= 1e-12 * max(1.0, abs(sv.value))
