"""Transformation theorems checked by quadrature on both sides."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schlomilch import specfun
from schlomilch.transform import (
    MeromorphicMap,
    OddPolynomial,
    PreconditionError,
    SelfInverseFn,
    SeriesDivergenceError,
    TransformSpec,
    alter_reduce,
    basis_change,
    cs_integrand,
    extended_check,
    meromorphic_transform_check,
    power_substituted_integrand,
    self_inverse,
    series_value,
    verify_alter_reduce,
    verify_corollary,
    verify_cs,
    verify_power_substitution,
)
from schlomilch.quad import integrate_with_splits

SQRT_PI = math.sqrt(math.pi)
KINDS = ["reciprocal", "log-expm1", "exp-log", "log-sinh-ratio", "sinh-asinh"]


def gauss(u):
    return math.exp(-u)


def test_cs_integrand_points():
    assert cs_integrand(gauss, TransformSpec(1, 1))(1.0) == 1.0
    assert math.isclose(cs_integrand(gauss, TransformSpec(1, 2))(2.0), math.exp(-1.0))
    assert cs_integrand(lambda u: u, TransformSpec(1, 1))(2.0) == 2.25
    assert cs_integrand(gauss, TransformSpec(1, 1))(0.0) == 0.0


def test_transform_spec_validation():
    with pytest.raises(ValueError):
        TransformSpec(0.0, 1.0)
    with pytest.raises(ValueError):
        TransformSpec(1.0, -1.0)


@pytest.mark.parametrize("a, b, expected", [(1, 3, SQRT_PI / 2), (2, 1, SQRT_PI / 4)])
def test_verify_cs_gaussian(a, b, expected):
    r = verify_cs(gauss, TransformSpec(a, b), 1e-10)
    assert r.passed
    assert abs(r.rhs - expected) <= 1e-12
    assert abs(r.lhs - expected) <= 1e-12


def test_verify_cs_rational():
    r = verify_cs(lambda u: 1 / (1 + u) ** 2, TransformSpec(1, 1), 1e-10)
    assert r.passed and abs(r.rhs - math.pi / 4) <= 1e-12


@pytest.mark.parametrize("a", [0.5, 1.0, 3.0])
def test_b_invariance(a):
    f = lambda u: 1 / (1 + u * u)  # noqa: E731
    reports = [verify_cs(f, TransformSpec(a, b), 1e-9) for b in (0.5, 1, 2, 5)]
    assert all(r.passed for r in reports)
    assert len({r.rhs for r in reports}) == 1


def test_scale_covariance():
    f = lambda u: math.exp(-u) / (1 + u)  # noqa: E731
    base = verify_cs(f, TransformSpec(1, 1), 1e-10).lhs
    for a in (0.5, 2.0, 7.0):
        assert math.isclose(verify_cs(f, TransformSpec(a, a), 1e-10).lhs, base / a, rel_tol=1e-10)


def test_basis_change_examples():
    assert basis_change([0, 0, 0, 1]) == (7, 14, 7, 1)
    assert basis_change([0, 1]) == (3, 1)
    assert basis_change([1], Fraction(3), Fraction(5)) == (1,)
    assert basis_change([Fraction(2, 3)], 7, 11) == (Fraction(2, 3),)


def test_basis_change_identity_on_a_grid():
    c = [Fraction(1), Fraction(-2, 3), Fraction(0), Fraction(5, 7)]
    a, b = Fraction(3, 2), Fraction(2, 5)
    d = basis_change(c, a, b)
    h = OddPolynomial(c)
    for x in (Fraction(1, 3), Fraction(1), Fraction(17, 5)):
        y = a * x - b / x
        lhs = sum(ck * (a * x) ** (2 * k + 1) for k, ck in enumerate(c)) - sum(
            ck * (b / x) ** (2 * k + 1) for k, ck in enumerate(c)
        )
        rhs = sum(dk * y ** (2 * k + 1) for k, dk in enumerate(d))
        assert lhs == rhs
        assert math.isclose(h(float(a * x)) - h(float(b / x)), float(rhs), rel_tol=1e-12)


@given(
    st.lists(st.fractions(-5, 5, max_denominator=9), min_size=1, max_size=5),
    st.lists(st.fractions(-5, 5, max_denominator=9), min_size=1, max_size=5),
    st.fractions(-3, 3, max_denominator=5),
)
@settings(max_examples=100, deadline=None)
def test_basis_change_linear(c1, c2, lam):
    n = max(len(c1), len(c2))
    c1 = c1 + [Fraction(0)] * (n - len(c1))
    c2 = c2 + [Fraction(0)] * (n - len(c2))
    combo = [x + lam * y for x, y in zip(c1, c2)]
    if n > 1 and (c1[-1] == 0 or c2[-1] == 0 or combo[-1] == 0):
        return
    a, b = Fraction(3, 2), Fraction(5, 4)
    d1, d2, dc = basis_change(c1, a, b), basis_change(c2, a, b), basis_change(combo, a, b)
    assert dc == tuple(x + lam * y for x, y in zip(d1, d2))


def test_odd_polynomial_validation():
    with pytest.raises(ValueError):
        OddPolynomial([])
    with pytest.raises(ValueError):
        OddPolynomial([1, 0])
    assert OddPolynomial([0]).n == 0


def test_corollary_cubic():
    r = verify_corollary([0, 1], gauss, TransformSpec(1, 1), 1e-10)
    assert r.passed
    assert abs(r.rhs - 0.2821423612049823) <= 1e-12


def test_corollary_linear_is_cs():
    f = lambda u: 1 / (1 + u) ** 2  # noqa: E731
    spec = TransformSpec(2, 3)
    assert math.isclose(verify_corollary([1], f, spec, 1e-10).lhs, verify_cs(f, spec, 1e-10).lhs, rel_tol=1e-12)


def test_corollary_seventh_power():
    r = verify_corollary([0, 0, 0, 1], gauss, TransformSpec(1, 1), 1e-10)
    assert r.passed
    assert abs(r.lhs - 0.12035125047101740) <= 1e-12


def test_corollary_general_scales():
    r = verify_corollary([1, 2, 0, 1], gauss, TransformSpec(1.5, 0.25), 1e-10)
    assert r.passed


def test_alter_reduce_linear():
    r = verify_alter_reduce(lambda u: u, 0.0, 1.0, 1e-10)
    assert r.passed
    assert abs(r.lhs - math.pi / (2 * math.sqrt(2))) <= 1e-12


def test_alter_reduce_bessel_value():
    r = verify_alter_reduce(lambda u: -math.expm1(-u), 1.0, 8.0, 1e-10)
    closed = 2 * math.pi / math.e * (specfun.bessel_i(0, 1.0) + specfun.bessel_i(1, 1.0))
    assert r.passed
    assert abs(r.lhs - closed) <= 1e-11 and abs(r.rhs - closed) <= 1e-11


def test_alter_reduce_constant_reports_failure():
    r = verify_alter_reduce(lambda u: 1.0, 0.0, 1.0, 1e-8)
    assert not r.passed
    assert any("not-converged" in f for f in r.flags)


def test_alter_reduce_pieces():
    red = alter_reduce(lambda u: u, 3.0, 2.0)
    assert math.isclose(red.a_star, 2.0 / 8.0)
    assert math.isclose(red.scale, math.sqrt(2.0) / (2 * math.sqrt(0.25)))
    with pytest.raises(ValueError):
        alter_reduce(lambda u: u, -1.0, 1.0)


def test_series_value():
    assert math.isclose(series_value([1], 0.0), math.pi / 2**1.5, rel_tol=1e-15)
    assert series_value([0.0] * 10, 0.5) == 0.0
    b = 8.0
    coeffs = [(-1) ** (n + 1) * b**n / math.factorial(n) for n in range(1, 41)]
    assert abs(series_value(coeffs, 1.0) - 4.232793590044984) <= 1e-12


def test_series_value_matches_quadrature():
    # f(u) = u/(1-u) = sum u^n, a = 0.3
    a = 0.3
    got = series_value([1.0] * 60, a)
    r = verify_alter_reduce(lambda u: u / (1 - u), a, 1.0, 1e-10)
    assert abs(got - r.lhs) <= 1e-10


def test_series_divergence_detected():
    with pytest.raises(SeriesDivergenceError):
        series_value([10.0**n for n in range(20)], 0.0)
    with pytest.raises(ValueError):
        series_value([1.0] * 61, 0.0)


def test_power_substitution():
    g = power_substituted_integrand(gauss, 1.0, 1.0)
    h = cs_integrand(gauss, TransformSpec(1, 1))
    for t in (0.3, 1.0, 2.5):
        assert g(t) == h(t)
    r = verify_power_substitution(gauss, 1.0, 2.0, 1e-10)
    assert r.passed and abs(r.lhs - SQRT_PI / 4) <= 1e-12
    r = verify_power_substitution(gauss, 2.0, 0.5, 1e-10)
    assert r.passed and abs(r.lhs - SQRT_PI / 2) <= 1e-12


def test_meromorphic_single_pole():
    phi = MeromorphicMap((1.0,), (2.0,))
    assert phi.residues() == (-1.5,)
    r = meromorphic_transform_check(phi, lambda y: math.exp(-y * y), 1e-10)
    assert r.passed and abs(r.lhs - SQRT_PI / 2) <= 1e-12
    assert not r.flags


def test_meromorphic_two_poles():
    phi = MeromorphicMap((1.0, 3.0), (2.0, 4.0))
    assert all(v < 0 for v in phi.residues())
    r = meromorphic_transform_check(phi, lambda y: 1 / (1 + y * y), 1e-10)
    assert r.passed and abs(r.lhs - math.pi / 2) <= 1e-12


def test_meromorphic_identity_map():
    r = meromorphic_transform_check(MeromorphicMap(), lambda y: 1 / (1 + y * y), 1e-10)
    assert r.passed and r.lhs == r.rhs


def test_meromorphic_residue_sign_violation():
    with pytest.raises(PreconditionError):
        meromorphic_transform_check(MeromorphicMap((2.0,), (1.0,)), gauss)


def test_residue_matches_numeric_limit():
    phi = MeromorphicMap((1.0, 3.0), (2.0, 4.0))
    for p, res in zip(phi.poles, phi.residues()):
        eps = 1e-7
        assert math.isclose(eps * phi(p + eps), res, rel_tol=1e-5)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("param", [0.5, 1.0, 3.0])
def test_self_inverse_involution_and_monotone(kind, param):
    s = SelfInverseFn(kind, param)
    x0 = s.fixed_point
    assert math.isclose(s(x0), x0, rel_tol=1e-12)
    if kind == "exp-log":
        grid = [math.exp(math.sqrt(param) * 10 ** (-0.7 + 1.4 * i / 99)) for i in range(100)]
    else:
        grid = [x0 * 10 ** (-1 + 2 * i / 99) for i in range(100)]
    vals = [s(x) for x in grid]
    for x, v in zip(grid, vals):
        assert math.isclose(s(v), x, rel_tol=1e-10)
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_self_inverse_domain_and_values():
    assert self_inverse(SelfInverseFn("reciprocal", 3.0), 2.0) == 1.5
    s = SelfInverseFn("log-expm1", 1.0)
    assert math.isclose(s.fixed_point, math.log(2.0))
    with pytest.raises(ValueError):
        SelfInverseFn("exp-log", 1.0)(0.5)
    with pytest.raises(ValueError):
        SelfInverseFn("nope", 1.0)


def test_log_expm1_example():
    s = SelfInverseFn("log-expm1", 1.0)
    r = extended_check(s, gauss, 1.0, 1e-10)
    assert r.passed and abs(r.lhs - SQRT_PI / 2) <= 1e-12
    direct = integrate_with_splits(lambda x: math.exp(-math.log(math.expm1(x)) ** 2), [math.log(2)], 1e-12)
    assert abs(direct.value - SQRT_PI / 2) <= 1e-12


def test_log_sinh_ratio_gap_form():
    al = 1.7
    s = SelfInverseFn("log-sinh-ratio", al)
    for x in (0.2, 1.0, 3.0):
        form = math.log(math.exp(al * x) * math.sinh(al * x) / (1 + math.cosh(al * x))) / al
        assert math.isclose(s.gap(x), form, rel_tol=1e-13, abs_tol=1e-15)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("a", [1.0, 2.5])
def test_extended_check_all_kinds(kind, a):
    # (1+u)*(1+u) saturates to inf where (1+u)**2 would raise OverflowError
    r = extended_check(SelfInverseFn(kind, 1.3), lambda u: 1 / ((1 + u) * (1 + u)), a, 1e-9)
    assert r.passed
    assert math.isclose(r.rhs, math.pi / 4 / a, rel_tol=1e-12)
