"""Pure-Python numerical kernels.

This module mirrors ``_ckernels.pyx`` function for function.  It is used when
the compiled extension is not importable, or when ``SCHLOMILCH_PURE=1`` is set.
Both backends must agree to rounding; ``tests/test_backends.py`` enforces it.
"""

from __future__ import annotations

import math
import threading
from decimal import Decimal, localcontext

import numpy as np

BACKEND = "python"

_HALF_PI = 0.5 * math.pi
_SQRT_PI = math.sqrt(math.pi)
_TWO_OVER_SQRT_PI = 2.0 / _SQRT_PI
_LN_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)

# ---------------------------------------------------------------------------
# Gamma (Lanczos, g = 7, n = 9)
# ---------------------------------------------------------------------------

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _lanczos_sum(z: float) -> float:
    # z is the shifted argument (x - 1)
    acc = _LANCZOS_COEF[0]
    for i in range(1, 9):
        acc += _LANCZOS_COEF[i] / (z + i)
    return acc


def gamma_pos(x: float) -> float:
    """Gamma function for x > 0 (no argument checks)."""
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma_pos(1.0 - x))
    if x == math.floor(x) and x <= 171.0:
        return float(math.factorial(int(x) - 1))
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    # split the power to delay overflow near x = 170
    p = t ** (0.5 * (z + 0.5))
    return math.sqrt(2.0 * math.pi) * p * (p * math.exp(-t)) * _lanczos_sum(z)


def lgamma_pos(x: float) -> float:
    """log Gamma for x > 0 (no argument checks)."""
    if x < 0.5:
        return math.log(math.pi / math.sin(math.pi * x)) - lgamma_pos(1.0 - x)
    if x < 20.0:
        return math.log(gamma_pos(x))
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    return _LN_SQRT_2PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_sum(z))


# ---------------------------------------------------------------------------
# Bessel I0, I1, J0, J1 by power series
# ---------------------------------------------------------------------------


def _bessel_series_decimal(order: int, x: float, modified: bool) -> float:
    # Used where the alternating J series cancels badly in double precision.
    with localcontext() as ctx:
        ctx.prec = 60
        half = Decimal(x) / 2
        q = half * half
        if not modified:
            q = -q
        term = Decimal(1) if order == 0 else half
        total = term
        j = 0
        eps = Decimal(10) ** -40
        while True:
            j += 1
            term = term * q / (j * (j + order))
            total += term
            if abs(term) <= eps * abs(total) and j > 5:
                break
        return float(total)


def bessel_series(order: int, x: float, modified: bool) -> float:
    """I_order(x) (modified) or J_order(x), order in {0, 1}, |x| <= 30."""
    if not modified and abs(x) > 10.0:
        return _bessel_series_decimal(order, x, modified)
    half = 0.5 * x
    q = half * half
    if not modified:
        q = -q
    term = 1.0 if order == 0 else half
    total = term
    j = 0
    while True:
        j += 1
        term *= q / (j * (j + order))
        total += term
        if abs(term) <= 1e-17 * abs(total) or term == 0.0:
            break
    return total


# ---------------------------------------------------------------------------
# erf / erfc
# ---------------------------------------------------------------------------


def _erf_series(x: float) -> float:
    # erf(x) = 2/sqrt(pi) exp(-x^2) sum 2^n x^(2n+1) / (1*3*...*(2n+1)); all terms positive
    x2 = x * x
    term = x
    total = x
    n = 0
    while True:
        n += 1
        term *= 2.0 * x2 / (2 * n + 1)
        total += term
        if term <= 1e-17 * total:
            break
    return _TWO_OVER_SQRT_PI * math.exp(-x2) * total


def _erfc_cf(x: float) -> float:
    # x >= 2.5: erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    tiny = 1e-300
    f = x
    c = x
    d = 0.0
    k = 1
    while k < 500:
        an = 0.5 * k
        d = x + an * d
        if d == 0.0:
            d = tiny
        c = x + an / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            break
        k += 1
    return math.exp(-x * x) / (_SQRT_PI * f)


def erf(x: float) -> float:
    if x != x:
        return x
    ax = abs(x)
    if ax < 2.5:
        v = _erf_series(ax)
    elif ax > 6.0:
        v = 1.0
    else:
        v = 1.0 - _erfc_cf(ax)
    return v if x >= 0 else -v


def erfc(x: float) -> float:
    if x != x:
        return x
    if x < 2.5:
        return 1.0 - erf(x)
    if x > 27.3:
        return 0.0
    return _erfc_cf(x)


# ---------------------------------------------------------------------------
# Sine integral
# ---------------------------------------------------------------------------


def sine_integral(x: float) -> float:
    """Si(x) by its alternating Taylor series, |x| <= 8."""
    x2 = x * x
    term = x  # (-1)^k x^(2k+1) / (2k+1)!
    total = x
    k = 0
    while True:
        k += 1
        term *= -x2 / ((2 * k) * (2 * k + 1))
        contrib = term / (2 * k + 1)
        total += contrib
        if abs(contrib) <= 1e-17 * abs(total) or contrib == 0.0:
            break
    return total


# ---------------------------------------------------------------------------
# Dirichlet eta via Borwein's accelerated alternating series
# ---------------------------------------------------------------------------

ETA_DEPTH = 40


def _borwein_table(n: int) -> tuple[float, ...]:
    # e_k = (d_n - d_k) / d_n with
    # d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), exact in integers
    d = []
    acc = 0
    for i in range(n + 1):
        acc += (
            math.factorial(n + i - 1) * 4**i
            // (math.factorial(n - i) * math.factorial(2 * i))
        )
        d.append(n * acc)
    dn = d[n]
    return tuple((dn - d[k]) / dn for k in range(n))


BORWEIN_WEIGHTS = _borwein_table(ETA_DEPTH)


def eta(s: float) -> float:
    """Dirichlet eta for real s > 0."""
    total = 0.0
    sign = 1.0
    for k in range(ETA_DEPTH):
        total += sign * BORWEIN_WEIGHTS[k] * math.exp(-s * math.log(k + 1.0))
        sign = -sign
    return total


# ---------------------------------------------------------------------------
# Carlson R_F by duplication
# ---------------------------------------------------------------------------


def carlson_rf(x: float, y: float, z: float) -> float:
    a0 = (x + y + z) / 3.0
    q = 578.0 * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))  # (3 * 1e-17)^(-1/6)
    xm, ym, zm, am = x, y, z, a0
    scale = 1.0
    while scale * q >= abs(am):
        sx = math.sqrt(xm)
        sy = math.sqrt(ym)
        sz = math.sqrt(zm)
        lam = sx * sy + sx * sz + sy * sz
        xm = 0.25 * (xm + lam)
        ym = 0.25 * (ym + lam)
        zm = 0.25 * (zm + lam)
        am = 0.25 * (am + lam)
        scale *= 0.25
    X = (a0 - x) * scale / am
    Y = (a0 - y) * scale / am
    Z = -X - Y
    e2 = X * Y - Z * Z
    e3 = X * Y * Z
    return (
        1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0
    ) / math.sqrt(am)


# ---------------------------------------------------------------------------
# 2F3 series
# ---------------------------------------------------------------------------


def hyp2f3_series(
    a1: float, a2: float, b1: float, b2: float, b3: float, z: float
) -> float:
    term = 1.0
    total = 1.0
    small = 0
    k = 0
    while k < 2000:
        term *= (a1 + k) * (a2 + k) / ((b1 + k) * (b2 + k) * (b3 + k) * (k + 1)) * z
        k += 1
        total += term
        if abs(term) <= 1e-17 * abs(total):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
    return total


# ---------------------------------------------------------------------------
# Double-exponential quadrature
# ---------------------------------------------------------------------------

TANH_SINH = 0
EXP_SINH = 1

_H0 = 1.0
_TMAX = 6.5
_WEIGHT_FLOOR = 1e-300
_TAIL_RATIO = 1e-18


class NonFiniteNode(ArithmeticError):
    """The integrand returned a non-finite value at an interior node."""

    def __init__(self, x: float, value: float):
        super().__init__(f"integrand is {value!r} at interior node x={x!r}")
        self.x = x
        self.value = value


def _node_tanh_sinh(t: float) -> tuple[float, float]:
    # returns (d, w): distance to the nearer endpoint and weight, both per half-length
    if t == 0.0:
        return 1.0, _HALF_PI
    u = _HALF_PI * math.sinh(abs(t))
    e = math.exp(-2.0 * u)
    d = 2.0 * e / (1.0 + e)
    w = _HALF_PI * math.cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e))
    return d, w


def _node_exp_sinh(t: float) -> tuple[float, float]:
    # returns (offset from lower limit, weight)
    u = _HALF_PI * math.sinh(t)
    if u > 709.0:
        return math.inf, math.inf
    ex = math.exp(u)
    return ex, _HALF_PI * math.cosh(t) * ex


_tables: dict[tuple[int, int], list[tuple[float, float, float]]] = {}
_tables_lock = threading.Lock()


def _level_nodes(kind: int, level: int) -> list[tuple[float, float, float]]:
    """Cached (t, d, w) triples that are new at ``level``; built once under a lock."""
    key = (kind, level)
    nodes = _tables.get(key)
    if nodes is not None:
        return nodes
    with _tables_lock:
        nodes = _tables.get(key)
        if nodes is None:
            h = _H0 / (1 << level)
            kmax = int(_TMAX / h)
            step = 1 if level == 0 else 2
            start = 0 if level == 0 else 1
            rule = _node_tanh_sinh if kind == TANH_SINH else _node_exp_sinh
            built = []
            for k in range(start, kmax + 1, step):
                for sgn in ((1,) if k == 0 else (-1, 1)):
                    t = sgn * k * h
                    d, w = rule(t)
                    built.append((t, d, w))
            _tables[key] = built
            nodes = built
    return nodes


def _place(kind, lo, hi, half, t, d):
    """Abscissa plus exact distances to the lower and upper limit."""
    if kind == TANH_SINH:
        if t == 0.0:
            return lo + half, half, half
        if t < 0.0:
            left = half * d
            return lo + left, left, 2.0 * half - left
        right = half * d
        return hi - right, 2.0 * half - right, right
    return lo + d, d, math.inf


def _evaluate(f, x, left, right, complement):
    try:
        v = f(x, left, right) if complement else f(x)
    except (OverflowError, ZeroDivisionError, ValueError):
        return math.nan
    return float(v)


def _usable(kind, lo, hi, x, left, right, complement):
    if complement:
        return left > 0.0 and right > 0.0 and x == x
    if kind == TANH_SINH:
        return lo < x < hi
    return lo < x < math.inf


def de_integrate(f, lo, hi, kind, tol, min_level, max_level, complement=False):
    """Level-doubling double-exponential quadrature.

    ``kind`` is TANH_SINH for [lo, hi] or EXP_SINH for [lo, inf) (hi ignored).
    With ``complement`` set, f is called as ``f(x, x - lo, hi - x)`` where the
    distances are exact even when x itself rounds onto a limit.

    Returns ``(value, error_estimate, evaluations, converged, level)``.
    Raises NonFiniteNode when f is non-finite at a node whose weight is not
    negligible.
    """
    half = 0.5 * (hi - lo) if kind == TANH_SINH else 1.0
    evals = 0

    # level 0: walk outward from t = 0 to fix the truncation window
    level0 = _level_nodes(kind, 0)
    t_left = 0.0
    t_right = 0.0
    t0, d0, w0 = level0[0]
    x, left, right = _place(kind, lo, hi, half, t0, d0)
    v = _evaluate(f, x, left, right, complement)
    evals += 1
    if not math.isfinite(v):
        raise NonFiniteNode(x, v)
    total = w0 * v
    biggest = abs(total)
    for negative in (True, False):
        quiet = 0
        edge = 0.0
        for t, d, w in level0[1:]:
            if (t < 0.0) != negative:
                continue
            x, left, right = _place(kind, lo, hi, half, t, d)
            if not _usable(kind, lo, hi, x, left, right, complement):
                # finer nodes short of this one may still be representable
                edge = t
                break
            v = _evaluate(f, x, left, right, complement)
            evals += 1
            if not math.isfinite(v):
                if quiet:
                    # past a negligible node the window simply ends
                    break
                if w * half < _WEIGHT_FLOOR:
                    edge = t
                    break
                raise NonFiniteNode(x, v)
            c = w * v
            total += c
            edge = t
            ac = abs(c)
            if ac > biggest:
                biggest = ac
            if biggest > 0.0 and ac <= _TAIL_RATIO * biggest:
                quiet += 1
                if quiet >= 2:
                    break
            else:
                quiet = 0
        if negative:
            t_left = edge
        else:
            t_right = edge

    h = _H0
    estimate = h * total * half
    err = math.inf
    converged = False
    level = 0
    for level in range(1, max_level + 1):
        h = _H0 / (1 << level)
        for t, d, w in _level_nodes(kind, level):
            if t < t_left or t > t_right:
                continue
            x, left, right = _place(kind, lo, hi, half, t, d)
            if not _usable(kind, lo, hi, x, left, right, complement):
                continue
            v = _evaluate(f, x, left, right, complement)
            evals += 1
            if not math.isfinite(v):
                if w * half < _WEIGHT_FLOOR:
                    continue
                raise NonFiniteNode(x, v)
            total += w * v
        new = h * total * half
        err = abs(new - estimate)
        estimate = new
        if level >= min_level and err <= tol:
            converged = True
            break
    return estimate, err, evals, converged, level


# ---------------------------------------------------------------------------
# Branch selection for transformation-of-scale sampling
# ---------------------------------------------------------------------------


def branch_select(y, b, uniforms):
    """Map parent draws y to x with |x - b/x| = y, picking the larger root
    with probability x1 / sqrt(y^2 + 4b)."""
    y = np.asarray(y, dtype=float)
    u = np.asarray(uniforms, dtype=float)
    root = np.sqrt(y * y + 4.0 * b)
    x1 = 0.5 * (y + root)
    x2 = b / x1  # the smaller root, x1 * x2 = b; avoids cancellation
    return np.where(u * root < x1, x1, x2)
