"""Special functions for real arguments.

Everything the closed-form right-hand sides need: gamma, beta, Pochhammer,
Bessel I0/I1/J0/J1, erf/erfc, the sine integral, Dirichlet eta and Riemann
zeta, complete and incomplete elliptic integrals of the first kind, and the
generalized hypergeometric 2F3.  The inner loops live in the kernel backend
(compiled when available).

Arguments outside a function's declared domain raise :class:`DomainError`;
arguments inside the mathematical domain but beyond what the implementation
covers raise :class:`RangeError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels as _k

__all__ = [
    "DomainError",
    "RangeError",
    "SpecialFunctionError",
    "SpecialValue",
    "bessel_i",
    "bessel_j",
    "beta",
    "carlson_rf",
    "elliptic_f",
    "elliptic_k",
    "erf",
    "erfc",
    "eta",
    "evaluate",
    "gamma",
    "hyp2f3",
    "lambda_cap",
    "log_gamma",
    "pochhammer",
    "sine_integral",
    "zeta",
]

_EPS = 2.220446049250313e-16

GAMMA_MAX = 170.0
BESSEL_MAX = 30.0
SI_MAX = 8.0
ZETA_RANGE = (0.1, 30.0)
HYP_Z_MAX = 100.0


class SpecialFunctionError(ValueError):
    """Base class for argument errors raised by this module."""


class DomainError(SpecialFunctionError):
    """Argument outside the function's declared domain."""


class RangeError(SpecialFunctionError):
    """Argument valid in principle but beyond the supported range."""


@dataclass(frozen=True)
class SpecialValue:
    value: float
    abs_error: float


def _real(x, name: str) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name}: argument must be finite, got {x!r}")
    return x


# -- gamma family -----------------------------------------------------------


def gamma(x: float) -> float:
    """Gamma function for 0 < x <= 170."""
    x = _real(x, "gamma")
    if x <= 0.0:
        raise DomainError(f"gamma: argument must be positive, got {x!r}")
    if x > GAMMA_MAX:
        raise RangeError(f"gamma: argument {x!r} overflows (limit {GAMMA_MAX})")
    return _k.gamma_pos(x)


def log_gamma(x: float) -> float:
    x = _real(x, "log_gamma")
    if x <= 0.0:
        raise DomainError(f"log_gamma: argument must be positive, got {x!r}")
    return _k.lgamma_pos(x)


def beta(p: float, q: float) -> float:
    """Euler beta function B(p, q) for p, q > 0."""
    p = _real(p, "beta")
    q = _real(q, "beta")
    if p <= 0.0 or q <= 0.0:
        raise DomainError(f"beta: arguments must be positive, got ({p!r}, {q!r})")
    if p + q <= GAMMA_MAX:
        return _k.gamma_pos(p) * _k.gamma_pos(q) / _k.gamma_pos(p + q)
    return math.exp(_k.lgamma_pos(p) + _k.lgamma_pos(q) - _k.lgamma_pos(p + q))


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1)."""
    if k < 0:
        raise DomainError("pochhammer: k must be non-negative")
    out = 1.0
    for i in range(k):
        out *= a + i
    return out


# -- Bessel -----------------------------------------------------------------


def _bessel_args(order, x, name):
    if order not in (0, 1):
        raise DomainError(f"{name}: order must be 0 or 1, got {order!r}")
    x = _real(x, name)
    if abs(x) > BESSEL_MAX:
        raise RangeError(f"{name}: |x| = {abs(x)!r} exceeds {BESSEL_MAX}")
    return int(order), x


def bessel_i(order: int, x: float) -> float:
    """Modified Bessel function I_0 or I_1 by its power series, |x| <= 30."""
    order, x = _bessel_args(order, x, "bessel_i")
    return _k.bessel_series(order, x, True)


def bessel_j(order: int, x: float) -> float:
    """Bessel function J_0 or J_1 by its power series, |x| <= 30.

    The alternating series cancels for large |x|; beyond |x| = 10 it is summed
    in 60-digit decimal arithmetic.
    """
    order, x = _bessel_args(order, x, "bessel_j")
    return _k.bessel_series(order, x, False)


# -- error function and sine integral ------------------------------------------


def erf(x: float) -> float:
    x = float(x)
    if math.isinf(x):
        return math.copysign(1.0, x)
    return _k.erf(x)


def erfc(x: float) -> float:
    """Complementary error function, accurate in the right tail."""
    x = float(x)
    if math.isinf(x):
        return 0.0 if x > 0 else 2.0
    return _k.erfc(x)


def sine_integral(x: float) -> float:
    """Si(x) = integral of sin(t)/t over [0, x], for |x| <= 8."""
    x = _real(x, "sine_integral")
    if abs(x) > SI_MAX:
        raise RangeError(f"sine_integral: |x| = {abs(x)!r} exceeds {SI_MAX}")
    return _k.sine_integral(x)


# -- zeta family --------------------------------------------------------------


def _zeta_arg(s, name):
    s = _real(s, name)
    lo, hi = ZETA_RANGE
    if not lo <= s <= hi:
        raise DomainError(f"{name}: s = {s!r} outside [{lo}, {hi}]")
    return s


def eta(s: float) -> float:
    """Dirichlet eta function, sum of (-1)^(n+1) n^(-s), for s in [0.1, 30]."""
    return _k.eta(_zeta_arg(s, "eta"))


def _one_minus_2_pow(s: float) -> float:
    # 1 - 2^(1-s) without cancellation near s = 1
    return -math.expm1((1.0 - s) * math.log(2.0))


def zeta(s: float) -> float:
    """Riemann zeta via eta(s) / (1 - 2^(1-s)); s in [0.1, 30], s != 1."""
    s = _zeta_arg(s, "zeta")
    if s == 1.0:
        raise DomainError("zeta: pole at s = 1")
    return _k.eta(s) / _one_minus_2_pow(s)


def lambda_cap(s: float) -> float:
    """(1 - 2^(1-s)) Gamma(s) zeta(s) / 2, i.e. eta(s) Gamma(s) / 2.

    Finite and continuous through s = 1.
    """
    s = _zeta_arg(s, "lambda_cap")
    return 0.5 * _k.eta(s) * _k.gamma_pos(s)


# -- elliptic integrals ---------------------------------------------------------


def carlson_rf(x: float, y: float, z: float) -> float:
    """Carlson's symmetric integral R_F; at most one argument may be zero."""
    x, y, z = (_real(v, "carlson_rf") for v in (x, y, z))
    if min(x, y, z) < 0.0 or (x == 0.0) + (y == 0.0) + (z == 0.0) > 1:
        raise DomainError("carlson_rf: arguments must be >= 0 with at most one zero")
    return _k.carlson_rf(x, y, z)


def _modulus(k, name):
    k = _real(k, name)
    if not 0.0 <= k < 1.0:
        raise DomainError(f"{name}: modulus must lie in [0, 1), got {k!r}")
    return k


def elliptic_k(k: float) -> float:
    """Complete elliptic integral of the first kind K(k), modulus convention."""
    k = _modulus(k, "elliptic_k")
    return _k.carlson_rf(0.0, (1.0 - k) * (1.0 + k), 1.0)


def elliptic_f(phi: float, k: float) -> float:
    """Incomplete elliptic integral F(phi, k) for phi in [0, pi/2]."""
    k = _modulus(k, "elliptic_f")
    phi = _real(phi, "elliptic_f")
    if not 0.0 <= phi <= 0.5 * math.pi:
        raise DomainError(f"elliptic_f: phi must lie in [0, pi/2], got {phi!r}")
    if phi == 0.0:
        return 0.0
    s = math.sin(phi)
    c = math.cos(phi)
    return s * _k.carlson_rf(c * c, (1.0 - k * s) * (1.0 + k * s), 1.0)


# -- hypergeometric -------------------------------------------------------------


def hyp2f3(a1: float, a2: float, b1: float, b2: float, b3: float, z: float) -> float:
    """Generalized hypergeometric 2F3(a1, a2; b1, b2, b3; z) for |z| <= 100."""
    for b in (b1, b2, b3):
        if b <= 0 and float(b).is_integer():
            raise DomainError(f"hyp2f3: lower parameter {b!r} is a non-positive integer")
    z = _real(z, "hyp2f3")
    if abs(z) > HYP_Z_MAX:
        raise RangeError(f"hyp2f3: |z| = {abs(z)!r} exceeds {HYP_Z_MAX}")
    return _k.hyp2f3_series(a1, a2, b1, b2, b3, z)


# -- values with error bounds ----------------------------------------------------


def _series_scale(name: str, args: tuple) -> float:
    # Magnitude against which rounding accumulates: the sum of |terms| for
    # alternating series, |value| otherwise.
    if name == "bessel_j":
        order, x = args
        if abs(x) > 10.0:
            return 0.0
        return _k.bessel_series(int(order), abs(x), True)
    if name == "sine_integral":
        return math.sinh(abs(args[0]))
    if name in ("eta", "zeta", "lambda_cap"):
        s = float(args[0])
        return math.fsum(k**-s for k in range(1, 41))
    return 0.0


_FUNCS = {
    "gamma": (gamma, 6.0),
    "log_gamma": (log_gamma, 16.0),
    "beta": (beta, 200.0),
    "bessel_i": (bessel_i, 8.0),
    "bessel_j": (bessel_j, 1.0),
    "erf": (erf, 8.0),
    "erfc": (erfc, 32.0),
    "sine_integral": (sine_integral, 2.0),
    "eta": (eta, 8.0),
    "zeta": (zeta, 8.0),
    "lambda_cap": (lambda_cap, 16.0),
    "elliptic_k": (elliptic_k, 16.0),
    "elliptic_f": (elliptic_f, 16.0),
    "hyp2f3": (hyp2f3, 16.0),
}


def evaluate(name: str, *args) -> SpecialValue:
    """Evaluate a named function and attach a conservative absolute error bound.

    The bound is ``ulps * eps * max(|value|, scale)`` where ``scale`` is the
    sum of absolute series terms for the alternating expansions.
    """
    try:
        fn, ulps = _FUNCS[name]
    except KeyError:
        raise KeyError(f"unknown special function {name!r}") from None
    value = fn(*args)
    scale = max(abs(value), _series_scale(name, args))
    if name == "gamma":
        # pow/exp of an argument near 170 amplify rounding by about x
        ulps *= max(1.0, abs(float(args[0])))
    elif name == "zeta":
        # eta's absolute error divided by 1 - 2^(1-s), plus the final rounding
        eta_err = ulps * _EPS * _series_scale(name, args)
        err = eta_err / abs(_one_minus_2_pow(float(args[0]))) + 2 * _EPS * abs(value)
        return SpecialValue(value, err)
    return SpecialValue(value, ulps * _EPS * scale)
