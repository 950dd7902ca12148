"""Compiled and pure-Python kernels agree."""

from __future__ import annotations

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from schlomilch import _pykernels as py

ck = pytest.importorskip("schlomilch._ckernels")

GRID = [0.01, 0.3, 1.0, 2.5, 7.0, 19.5, 60.0]


def close(a: float, b: float, rel: float = 1e-13) -> bool:
    return math.isclose(a, b, rel_tol=rel, abs_tol=1e-300)


def test_backend_names():
    assert py.BACKEND == "python"
    assert ck.BACKEND == "cython"


@pytest.mark.parametrize("x", GRID)
def test_gamma(x):
    assert close(ck.gamma_pos(x), py.gamma_pos(x))
    assert math.isclose(ck.lgamma_pos(x), py.lgamma_pos(x), rel_tol=1e-13, abs_tol=1e-14)


@pytest.mark.parametrize("x", [-6.0, -1.3, -0.01, 0.0, 0.2, 1.0, 3.7, 12.0])
def test_erf_pair(x):
    assert math.isclose(ck.erf(x), py.erf(x), rel_tol=1e-14, abs_tol=1e-16)
    assert close(ck.erfc(x), py.erfc(x), 1e-13)


@pytest.mark.parametrize("x", [-30.0, -2.0, 0.0, 0.5, 4.0, 25.0, 200.0])
def test_sine_integral(x):
    assert math.isclose(ck.sine_integral(x), py.sine_integral(x), rel_tol=1e-13, abs_tol=1e-16)


@pytest.mark.parametrize("order", [0, 1, 3])
@pytest.mark.parametrize("modified", [False, True])
@pytest.mark.parametrize("x", [0.0, 0.4, 3.0, 9.0])
def test_bessel_series(order, modified, x):
    a = ck.bessel_series(order, x, modified)
    b = py.bessel_series(order, x, modified)
    assert math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-15)


@pytest.mark.parametrize("s", [0.1, 0.5, 1.0, 2.0, 3.5, 10.0])
def test_eta(s):
    assert close(ck.eta(s), py.eta(s))


@pytest.mark.parametrize("xyz", [(0.0, 1.0, 2.0), (0.5, 0.5, 0.5), (1.0, 2.0, 4.0), (1e-3, 3.0, 30.0)])
def test_carlson_rf(xyz):
    assert close(ck.carlson_rf(*xyz), py.carlson_rf(*xyz))


@pytest.mark.parametrize("z", [-4.0, -0.25, 0.0, 0.3])
def test_hyp2f3(z):
    args = (0.25, 0.75, 0.5, 1.0, 1.5, z)
    assert close(ck.hyp2f3_series(*args), py.hyp2f3_series(*args), 1e-12)


QUAD_CASES = [
    (lambda x: math.exp(-x * x), 0.0, math.inf, py.EXP_SINH),
    (lambda x: 1.0 / (1.0 + x * x), 0.0, math.inf, py.EXP_SINH),
    (lambda x: math.log(x), 0.0, 1.0, py.TANH_SINH),
    (lambda x: 1.0 / math.sqrt(x), 0.0, 4.0, py.TANH_SINH),
]


@pytest.mark.parametrize("f, lo, hi, kind", QUAD_CASES)
def test_de_integrate(f, lo, hi, kind):
    a = ck.de_integrate(f, lo, hi, kind, 1e-12, 2, 10, False)
    b = py.de_integrate(f, lo, hi, kind, 1e-12, 2, 10, False)
    assert math.isclose(a[0], b[0], rel_tol=1e-13, abs_tol=1e-15)
    assert a[2] == b[2]
    assert a[3] == b[3]


def test_de_integrate_complement():
    def f(x, left, right):
        return 1.0 / math.sqrt(left * right)

    a = ck.de_integrate(f, 0.0, 1.0, py.TANH_SINH, 1e-12, 2, 10, True)
    b = py.de_integrate(f, 0.0, 1.0, py.TANH_SINH, 1e-12, 2, 10, True)
    assert math.isclose(a[0], b[0], rel_tol=1e-13)
    assert math.isclose(a[0], math.pi, rel_tol=1e-10)


def test_branch_select():
    rng = np.random.default_rng(0)
    y = np.abs(rng.standard_normal(1000))
    u = rng.random(1000)
    np.testing.assert_array_equal(ck.branch_select(y, 1.5, u), py.branch_select(y, 1.5, u))


def test_pure_backend_forced_by_environment():
    env = dict(os.environ, SCHLOMILCH_PURE="1")
    code = "from schlomilch._backend import BACKEND; print(BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
