# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels.

Same algorithms, constants and summation order as ``_pykernels``; results agree
with the pure-Python backend to the last bit on the node arithmetic and to
rounding elsewhere.
"""

import math

import numpy as np

from libc.math cimport (
    sqrt, exp, log, sin, cosh, sinh, fabs, floor, pow, isfinite, INFINITY, NAN, M_PI,
)

from schlomilch._pykernels import (
    BORWEIN_WEIGHTS as _PY_BORWEIN_WEIGHTS,
    ETA_DEPTH,
    EXP_SINH,
    TANH_SINH,
    NonFiniteNode,
    _bessel_series_decimal,
)

BACKEND = "cython"

cdef double HALF_PI = 0.5 * M_PI
cdef double SQRT_PI = sqrt(M_PI)
cdef double LN_SQRT_2PI = 0.5 * log(2.0 * M_PI)

cdef double LANCZOS_G = 7.0
cdef double[9] LANCZOS_COEF
LANCZOS_COEF[:] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
]

cdef double[64] BORWEIN
cdef int _i
for _i in range(ETA_DEPTH):
    BORWEIN[_i] = _PY_BORWEIN_WEIGHTS[_i]

cdef double[171] FACTORIAL
FACTORIAL[0] = 1.0
for _i in range(1, 171):
    FACTORIAL[_i] = float(math.factorial(_i))


cdef inline double _lanczos_sum(double z) nogil:
    cdef double acc = LANCZOS_COEF[0]
    cdef int i
    for i in range(1, 9):
        acc += LANCZOS_COEF[i] / (z + i)
    return acc


cpdef double gamma_pos(double x):
    cdef double z, t, p
    if x < 0.5:
        return M_PI / (sin(M_PI * x) * gamma_pos(1.0 - x))
    if x == floor(x) and x <= 171.0:
        return FACTORIAL[<int>x - 1]
    z = x - 1.0
    t = z + LANCZOS_G + 0.5
    p = pow(t, 0.5 * (z + 0.5))
    return sqrt(2.0 * M_PI) * p * (p * exp(-t)) * _lanczos_sum(z)


cpdef double lgamma_pos(double x):
    cdef double z, t
    if x < 0.5:
        return log(M_PI / sin(M_PI * x)) - lgamma_pos(1.0 - x)
    if x < 20.0:
        return log(gamma_pos(x))
    z = x - 1.0
    t = z + LANCZOS_G + 0.5
    return LN_SQRT_2PI + (z + 0.5) * log(t) - t + log(_lanczos_sum(z))


cpdef double bessel_series(int order, double x, bint modified):
    cdef double half, q, term, total
    cdef int j
    if not modified and fabs(x) > 10.0:
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
        if fabs(term) <= 1e-17 * fabs(total) or term == 0.0:
            break
    return total


cdef double _erf_series(double x):
    cdef double x2 = x * x
    cdef double term = x
    cdef double total = x
    cdef int n = 0
    while True:
        n += 1
        term *= 2.0 * x2 / (2 * n + 1)
        total += term
        if term <= 1e-17 * total:
            break
    return (2.0 / SQRT_PI) * exp(-x2) * total


cdef double _erfc_cf(double x):
    cdef double tiny = 1e-300
    cdef double f = x
    cdef double c = x
    cdef double d = 0.0
    cdef double an, delta
    cdef int k = 1
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
        if fabs(delta - 1.0) < 1e-16:
            break
        k += 1
    return exp(-x * x) / (SQRT_PI * f)


cpdef double erf(double x):
    cdef double ax, v
    if x != x:
        return x
    ax = fabs(x)
    if ax < 2.5:
        v = _erf_series(ax)
    elif ax > 6.0:
        v = 1.0
    else:
        v = 1.0 - _erfc_cf(ax)
    return v if x >= 0 else -v


cpdef double erfc(double x):
    if x != x:
        return x
    if x < 2.5:
        return 1.0 - erf(x)
    if x > 27.3:
        return 0.0
    return _erfc_cf(x)


cpdef double sine_integral(double x):
    cdef double x2 = x * x
    cdef double term = x
    cdef double total = x
    cdef double contrib
    cdef int k = 0
    while True:
        k += 1
        term *= -x2 / ((2 * k) * (2 * k + 1))
        contrib = term / (2 * k + 1)
        total += contrib
        if fabs(contrib) <= 1e-17 * fabs(total) or contrib == 0.0:
            break
    return total


cpdef double eta(double s):
    cdef double total = 0.0
    cdef double sign = 1.0
    cdef int k
    for k in range(ETA_DEPTH):
        total += sign * BORWEIN[k] * exp(-s * log(k + 1.0))
        sign = -sign
    return total


cpdef double carlson_rf(double x, double y, double z):
    cdef double a0 = (x + y + z) / 3.0
    cdef double q = 578.0 * max(fabs(a0 - x), fabs(a0 - y), fabs(a0 - z))
    cdef double xm = x, ym = y, zm = z, am = a0
    cdef double scale = 1.0
    cdef double sx, sy, sz, lam, X, Y, Z, e2, e3
    while scale * q >= fabs(am):
        sx = sqrt(xm)
        sy = sqrt(ym)
        sz = sqrt(zm)
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
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / sqrt(am)


cpdef double hyp2f3_series(double a1, double a2, double b1, double b2, double b3, double z):
    cdef double term = 1.0
    cdef double total = 1.0
    cdef int small = 0
    cdef int k = 0
    while k < 2000:
        term *= (a1 + k) * (a2 + k) / ((b1 + k) * (b2 + k) * (b3 + k) * (k + 1)) * z
        k += 1
        total += term
        if fabs(term) <= 1e-17 * fabs(total):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
    return total


# ---------------------------------------------------------------------------
# double-exponential quadrature
# ---------------------------------------------------------------------------

cdef double H0 = 1.0
cdef double TMAX = 6.5
cdef double WEIGHT_FLOOR = 1e-300
cdef double TAIL_RATIO = 1e-18


cdef inline void _node(int kind, double t, double* d, double* w) nogil:
    cdef double u, e, ex
    if kind == 0:
        if t == 0.0:
            d[0] = 1.0
            w[0] = HALF_PI
            return
        u = HALF_PI * sinh(fabs(t))
        e = exp(-2.0 * u)
        d[0] = 2.0 * e / (1.0 + e)
        w[0] = HALF_PI * cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e))
    else:
        u = HALF_PI * sinh(t)
        if u > 709.0:
            d[0] = INFINITY
            w[0] = INFINITY
            return
        ex = exp(u)
        d[0] = ex
        w[0] = HALF_PI * cosh(t) * ex


cdef inline void _place(int kind, double lo, double hi, double half, double t, double d,
                        double* x, double* left, double* right) nogil:
    if kind == 0:
        if t == 0.0:
            x[0] = lo + half
            left[0] = half
            right[0] = half
        elif t < 0.0:
            left[0] = half * d
            x[0] = lo + left[0]
            right[0] = 2.0 * half - left[0]
        else:
            right[0] = half * d
            x[0] = hi - right[0]
            left[0] = 2.0 * half - right[0]
    else:
        x[0] = lo + d
        left[0] = d
        right[0] = INFINITY


cdef inline bint _usable(int kind, double lo, double hi, double x, double left,
                         double right, bint complement) nogil:
    if complement:
        return left > 0.0 and right > 0.0 and x == x
    if kind == 0:
        return lo < x < hi
    return lo < x < INFINITY


cdef double _evaluate(object f, double x, double left, double right, bint complement):
    try:
        if complement:
            return float(f(x, left, right))
        return float(f(x))
    except (OverflowError, ZeroDivisionError, ValueError):
        return NAN


def de_integrate(f, double lo, double hi, int kind, double tol, int min_level,
                 int max_level, bint complement=False):
    """Compiled twin of ``_pykernels.de_integrate``."""
    cdef double half = 0.5 * (hi - lo) if kind == TANH_SINH else 1.0
    cdef long evals = 0
    cdef double t_left = 0.0, t_right = 0.0, edge
    cdef double t, d, w, x, left, right, v, c, ac
    cdef double total, biggest, h, estimate, new, err
    cdef int quiet, k, kmax, side, sgn, level, start, step
    cdef bint converged = False

    _node(kind, 0.0, &d, &w)
    _place(kind, lo, hi, half, 0.0, d, &x, &left, &right)
    v = _evaluate(f, x, left, right, complement)
    evals += 1
    if not isfinite(v):
        raise NonFiniteNode(x, v)
    total = w * v
    biggest = fabs(total)

    kmax = <int>(TMAX / H0)
    for side in range(2):
        sgn = -1 if side == 0 else 1
        quiet = 0
        edge = 0.0
        for k in range(1, kmax + 1):
            t = sgn * k * H0
            _node(kind, t, &d, &w)
            _place(kind, lo, hi, half, t, d, &x, &left, &right)
            if not _usable(kind, lo, hi, x, left, right, complement):
                edge = t
                break
            v = _evaluate(f, x, left, right, complement)
            evals += 1
            if not isfinite(v):
                if quiet:
                    break
                if w * half < WEIGHT_FLOOR:
                    edge = t
                    break
                raise NonFiniteNode(x, v)
            c = w * v
            total += c
            edge = t
            ac = fabs(c)
            if ac > biggest:
                biggest = ac
            if biggest > 0.0 and ac <= TAIL_RATIO * biggest:
                quiet += 1
                if quiet >= 2:
                    break
            else:
                quiet = 0
        if side == 0:
            t_left = edge
        else:
            t_right = edge

    h = H0
    estimate = h * total * half
    err = INFINITY
    level = 0
    for level in range(1, max_level + 1):
        h = H0 / (1 << level)
        kmax = <int>(TMAX / h)
        for k in range(1, kmax + 1, 2):
            for side in range(2):
                t = (-k if side == 0 else k) * h
                if t < t_left or t > t_right:
                    continue
                _node(kind, t, &d, &w)
                _place(kind, lo, hi, half, t, d, &x, &left, &right)
                if not _usable(kind, lo, hi, x, left, right, complement):
                    continue
                v = _evaluate(f, x, left, right, complement)
                evals += 1
                if not isfinite(v):
                    if w * half < WEIGHT_FLOOR:
                        continue
                    raise NonFiniteNode(x, v)
                total += w * v
        new = h * total * half
        err = fabs(new - estimate)
        estimate = new
        if level >= min_level and err <= tol:
            converged = True
            break
    return estimate, err, evals, converged, level


def branch_select(y, double b, uniforms):
    """Compiled twin of ``_pykernels.branch_select``."""
    cdef double[::1] yv = np.ascontiguousarray(y, dtype=np.float64)
    cdef double[::1] uv = np.ascontiguousarray(uniforms, dtype=np.float64)
    cdef Py_ssize_t n = yv.shape[0], i
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] ov = out
    cdef double root, x1
    for i in range(n):
        root = sqrt(yv[i] * yv[i] + 4.0 * b)
        x1 = 0.5 * (yv[i] + root)
        ov[i] = x1 if uv[i] * root < x1 else b / x1
    return out
