"""Transformed integrands and numerical checks of the transformation theorems.

The classic statement: for a, b > 0 and f with a convergent right side,

    int_0^inf f((a x - b/x)^2) dx = (1/a) int_0^inf f(y^2) dy.

This module builds the left-hand integrands for that identity and its
relatives (odd-polynomial compositions, the reduction to [0, 1], the series
form, power substitution, meromorphic maps with negative residues, and
general self-inverse functions), and compares both sides by quadrature.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .quad import (
    QuadratureResult,
    integrate_finite,
    integrate_semi_infinite,
    integrate_with_splits,
)
from .report import VerificationReport, compare, guarded, quad_tol_for

__all__ = [
    "EXAMPLE_MAPS",
    "MeromorphicMap",
    "OddPolynomial",
    "PreconditionError",
    "ReducedIntegral",
    "SelfInverseFn",
    "SeriesDivergenceError",
    "TransformSpec",
    "alter_reduce",
    "basis_change",
    "cs_integrand",
    "extended_check",
    "g_polynomial",
    "meromorphic_transform_check",
    "power_substituted_integrand",
    "rhs_integral",
    "self_inverse",
    "series_value",
    "verify_alter_reduce",
    "verify_corollary",
    "verify_cs",
    "verify_power_substitution",
]

RealFunction = Callable[[float], float]


class PreconditionError(ValueError):
    """A theorem's hypothesis does not hold for the given data."""


class SeriesDivergenceError(ArithmeticError):
    """Series terms stopped decreasing."""


@dataclass(frozen=True)
class TransformSpec:
    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise ValueError(f"need a > 0 and b > 0, got a={self.a!r}, b={self.b!r}")
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError("a and b must be finite")

    @property
    def center(self) -> float:
        """The point sqrt(b/a) where a x - b/x vanishes."""
        return math.sqrt(self.b / self.a)


def rhs_integral(f: RealFunction, a: float = 1.0, tol: float = 1e-10) -> QuadratureResult:
    """(1/a) int_0^inf f(y^2) dy."""
    r = integrate_semi_infinite(lambda y: f(y * y), 0.0, min(max(tol * a, 1e-14), 1e-3))
    return QuadratureResult(r.value / a, r.error_estimate / a, r.evaluations, r.converged)


# -- classic transform ---------------------------------------------------------


def cs_integrand(f: RealFunction, spec: TransformSpec) -> RealFunction:
    """x -> f((a x - b/x)^2).

    At x = 0 the argument is +inf and f decides what that means; the
    quadrature treats a non-finite result there as an endpoint value.
    """
    a, b = spec.a, spec.b

    def g(x: float) -> float:
        if x == 0.0:
            return f(math.inf)
        y = a * x - b / x
        return f(y * y)

    return g


def _lhs_split(g: RealFunction, center: float, tol: float, lo: float = 0.0) -> QuadratureResult:
    return integrate_with_splits(g, [center], tol, lo=lo)


def verify_cs(
    f: RealFunction, spec: TransformSpec, tol: float = 1e-8, id: str = "cs"
) -> VerificationReport:
    """Compare both sides of the classic transform by quadrature.

    The left side is split at sqrt(b/a), where the integrand peaks.

    Examples
    --------
    >>> r = verify_cs(lambda u: math.exp(-u), TransformSpec(1.0, 3.0))
    >>> r.passed, round(r.rhs, 12) == round(math.sqrt(math.pi) / 2, 12)
    (True, True)
    """
    qt = quad_tol_for(tol)
    lhs = guarded(_lhs_split, cs_integrand(f, spec), spec.center, qt)
    rhs = guarded(rhs_integral, f, spec.a, qt)
    return compare(id, {"a": spec.a, "b": spec.b}, lhs, rhs, tol)


# -- odd polynomial corollary ----------------------------------------------------


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    return Fraction(float(v))


@dataclass(frozen=True)
class OddPolynomial:
    """h(x) = sum_k c_k x^(2k+1) with exact rational coefficients."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Sequence):
        coeffs = tuple(_frac(c) for c in coefficients)
        if not coeffs:
            raise ValueError("an odd polynomial needs at least one coefficient")
        if len(coeffs) > 1 and coeffs[-1] == 0:
            raise ValueError("top coefficient must be non-zero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: float) -> float:
        x2 = x * x
        acc = float(self.coefficients[-1])
        for c in reversed(self.coefficients[:-1]):
            acc = acc * x2 + float(c)
        return acc * x


def basis_change(c: OddPolynomial | Sequence, a=1, b=1) -> tuple[Fraction, ...]:
    """Coefficients d_k with h(a x) - h(b/x) = sum_k d_k (a x - b/x)^(2k+1).

    d_k = sum_{j>=k} C(k+j, 2k) (2j+1)/(2k+1) (ab)^(j-k) c_j, computed exactly.

    >>> basis_change([0, 0, 0, 1])
    (Fraction(7, 1), Fraction(14, 1), Fraction(7, 1), Fraction(1, 1))
    """
    poly = c if isinstance(c, OddPolynomial) else OddPolynomial(c)
    cs = poly.coefficients
    ab = _frac(a) * _frac(b)
    n = len(cs) - 1
    out = []
    for k in range(n + 1):
        acc = Fraction(0)
        for j in range(k, n + 1):
            if cs[j]:
                acc += math.comb(k + j, 2 * k) * Fraction(2 * j + 1, 2 * k + 1) * ab ** (j - k) * cs[j]
        out.append(acc)
    return tuple(out)


def g_polynomial(d: Sequence[Fraction]) -> Callable[[float], float]:
    """u -> u (sum_k d_k u^k)^2, the function with H^2 = g((a x - b/x)^2)."""
    ds = [float(v) for v in d]

    def g(u: float) -> float:
        acc = ds[-1]
        for v in reversed(ds[:-1]):
            acc = acc * u + v
        return u * acc * acc

    return g


def verify_corollary(
    c: OddPolynomial | Sequence,
    f: RealFunction,
    spec: TransformSpec,
    tol: float = 1e-8,
    id: str = "corollary",
) -> VerificationReport:
    """int_0^inf f([h(ax) - h(b/x)]^2) dx against (1/a) int_0^inf f(g(y^2)) dy."""
    poly = c if isinstance(c, OddPolynomial) else OddPolynomial(c)
    a, b = spec.a, spec.b
    g = g_polynomial(basis_change(poly, Fraction(a), Fraction(b)))

    def lhs_f(x: float) -> float:
        if x == 0.0:
            return f(math.inf)
        h = poly(a * x) - poly(b / x)
        return f(h * h)

    qt = quad_tol_for(tol)
    lhs = guarded(_lhs_split, lhs_f, spec.center, qt)
    rhs = guarded(rhs_integral, lambda u: f(g(u)), a, qt)
    params = {"a": a, "b": b, "c": [str(v) for v in poly.coefficients]}
    return compare(id, params, lhs, rhs, tol)


# -- reduction to [0, 1] ------------------------------------------------------------


@dataclass(frozen=True)
class ReducedIntegral:
    """scale * int_0^1 integrand(t) dt, with the integrand in complement form.

    ``integrand(t, t, 1 - t)`` receives exact distances to both limits so the
    t^(-3/2) (1-t)^(-1/2) weight keeps full precision near the ends.
    """

    integrand: Callable[[float, float, float], float]
    scale: float
    a_star: float

    def __call__(self, t: float) -> float:
        return self.integrand(t, t, 1.0 - t)

    def integrate(self, tol: float = 1e-10) -> QuadratureResult:
        r = integrate_finite(self.integrand, 0.0, 1.0, tol / self.scale, complement=True)
        return QuadratureResult(
            self.scale * r.value, self.scale * r.error_estimate, r.evaluations, r.converged
        )


def alter_reduce(f: RealFunction, a: float, b: float) -> ReducedIntegral:
    """Rewrite int_0^inf f(b x^2/(x^4 + 2 a x^2 + 1)) dx as an integral over (0, 1).

    The result is (sqrt(b) / (2 sqrt(a*))) int_0^1 f(a* t) / (t sqrt(t (1-t))) dt
    with a* = b / (2 (1 + a)).  Convergence at t = 0 needs f(0) = 0.
    """
    if not a > -1.0:
        raise ValueError(f"need a > -1, got {a!r}")
    if not b > 0.0:
        raise ValueError(f"need b > 0, got {b!r}")
    a_star = b / (2.0 * (1.0 + a))
    scale = math.sqrt(b) / (2.0 * math.sqrt(a_star))

    def integrand(t: float, left: float, right: float) -> float:
        return f(a_star * t) / left / math.sqrt(left * right)

    return ReducedIntegral(integrand, scale, a_star)


def verify_alter_reduce(
    f: RealFunction, a: float, b: float, tol: float = 1e-8, id: str = "alter_reduce"
) -> VerificationReport:
    """Compare the half-line integral with its [0, 1] reduction."""
    reduced = alter_reduce(f, a, b)
    qt = quad_tol_for(tol)

    def lhs_f(x: float) -> float:
        x2 = x * x
        if math.isinf(x2):
            return f(0.0)
        return f(b * x2 / (x2 * x2 + 2.0 * a * x2 + 1.0))

    # the argument peaks at x = 1
    lhs = guarded(integrate_with_splits, lhs_f, [1.0], qt)
    rhs = guarded(reduced.integrate, qt)
    return compare(id, {"a": a, "b": b}, lhs, rhs, tol, details={"a_star": reduced.a_star})


def series_value(c: Sequence[float], a: float) -> float:
    """Series form of int_0^inf f(x^2/(x^4 + 2 a x^2 + 1)) dx for f(u) = sum c_n u^n.

    Returns pi / (2^(3/2) sqrt(1+a)) * sum_{n>=0} c_{n+1} C(2n, n) u^n with
    u = 1/(8 (1+a)); ``c`` lists c_1, ..., c_M with M <= 60.

    Raises
    ------
    SeriesDivergenceError
        If the last terms grow, which signals that the truncation is useless.
    """
    if not a > -1.0:
        raise ValueError(f"need a > -1, got {a!r}")
    if len(c) > 60:
        raise ValueError("at most 60 series coefficients are supported")
    u = 1.0 / (8.0 * (1.0 + a))
    terms = [float(cn) * math.comb(2 * n, n) * u**n for n, cn in enumerate(c)]
    mags = [abs(t) for t in terms if t != 0.0]
    if len(mags) >= 4 and all(y > x for x, y in zip(mags[-4:], mags[-3:])):
        raise SeriesDivergenceError("series terms are growing; truncation is not reliable")
    return math.pi / (2.0 ** 1.5 * math.sqrt(1.0 + a)) * math.fsum(terms)


# -- power substitution --------------------------------------------------------------


def power_substituted_integrand(f: RealFunction, a: float, r: float) -> RealFunction:
    """t -> t^(r-1) f(a^2 (t^r - t^(-r))^2); its integral is (1/(a r)) int f(y^2)."""
    if not r > 0.0:
        raise ValueError(f"need r > 0, got {r!r}")
    if not a > 0.0:
        raise ValueError(f"need a > 0, got {a!r}")

    def g(t: float) -> float:
        if t == 0.0:
            return f(math.inf)
        p = t**r
        y = a * (p - 1.0 / p)
        return t ** (r - 1.0) * f(y * y)

    return g


def verify_power_substitution(
    f: RealFunction, a: float, r: float, tol: float = 1e-8, id: str = "power_sub"
) -> VerificationReport:
    qt = quad_tol_for(tol)
    lhs = guarded(integrate_with_splits, power_substituted_integrand(f, a, r), [1.0], qt)
    rhs = guarded(rhs_integral, f, a * r, qt)
    return compare(id, {"a": a, "r": r}, lhs, rhs, tol)


# -- meromorphic maps -------------------------------------------------------------------


@dataclass(frozen=True)
class MeromorphicMap:
    """phi(z) = z prod_j (z^2 - b_j^2) / (z^2 - a_j^2) with poles a_j and zeros b_j."""

    poles: tuple[float, ...] = ()
    zeros: tuple[float, ...] = ()

    def __post_init__(self):
        poles = tuple(float(p) for p in self.poles)
        zeros = tuple(float(z) for z in self.zeros)
        if len(poles) != len(zeros):
            raise ValueError("need as many zeros as poles")
        if any(p <= 0 for p in poles) or any(z <= 0 for z in zeros):
            raise ValueError("poles and zeros must be positive")
        if any(q <= p for p, q in zip(poles, poles[1:])):
            raise ValueError("poles must be strictly increasing")
        object.__setattr__(self, "poles", poles)
        object.__setattr__(self, "zeros", zeros)

    def __call__(self, z: float) -> float:
        z2 = z * z
        out = z
        for p, q in zip(self.poles, self.zeros):
            out *= (z2 - q * q) / (z2 - p * p) if z2 != p * p else math.inf
        return out

    def residues(self) -> tuple[float, ...]:
        """Residue of phi at each positive pole, from the factored form."""
        out = []
        for j, p in enumerate(self.poles):
            num = math.prod(p * p - q * q for q in self.zeros)
            den = 2.0 * math.prod(p * p - r * r for i, r in enumerate(self.poles) if i != j)
            out.append(num / den)
        return tuple(out)

    def linearity_ratio(self, x: float = 1e6) -> float:
        """phi(x)/x at a large x; near 1 for an asymptotically linear map."""
        return self(x) / x


# Interlaced poles and zeros (a_1 < b_1 < a_2 < ...) give negative residues.
EXAMPLE_MAPS = (
    MeromorphicMap((1.0,), (2.0,)),
    MeromorphicMap((1.0, 3.0), (2.0, 4.0)),
    MeromorphicMap((0.5, 2.0, 5.0), (1.0, 3.0, 6.0)),
)


def meromorphic_transform_check(
    phi: MeromorphicMap, f: RealFunction, tol: float = 1e-8, id: str = "meromorphic"
) -> VerificationReport:
    """Check int_0^inf f(phi(x)) dx = int_0^inf f(x) dx for even, integrable f.

    Raises
    ------
    PreconditionError
        If some residue is not negative.
    """
    res = phi.residues()
    bad = [p for p, r in zip(phi.poles, res) if not r < 0.0]
    if bad:
        raise PreconditionError(f"residue of phi is not negative at pole(s) {bad}")
    flags = []
    ratio = phi.linearity_ratio()
    if abs(ratio - 1.0) > 1e-3:
        flags.append("not-asymptotically-linear")
    qt = quad_tol_for(tol)
    lhs = guarded(integrate_with_splits, lambda x: f(phi(x)), list(phi.poles), qt)
    rhs = guarded(integrate_semi_infinite, f, 0.0, qt)
    params = {"poles": list(phi.poles), "zeros": list(phi.zeros)}
    return compare(id, params, lhs, rhs, tol, flags, details={"residues": res})


# -- self-inverse functions -----------------------------------------------------------

_KINDS = ("reciprocal", "log-expm1", "exp-log", "log-sinh-ratio", "sinh-asinh")


def _exp(v: float) -> float:
    return math.exp(v) if v < 709.0 else math.inf


@dataclass(frozen=True)
class SelfInverseFn:
    """A decreasing involution s on (domain_start, inf).

    Kinds, with parameter ``p`` (b for reciprocal, alpha otherwise):

    - reciprocal: s(x) = b / x
    - log-expm1: s(x) = x - log(e^(ax) - 1)/a = -log(1 - e^(-ax))/a
    - exp-log: s(x) = exp(a / log x) on (1, inf)
    - log-sinh-ratio: s(x) = -log(tanh(a x / 2))/a, so that
      x - s(x) = log(e^(ax) sinh(ax) / (1 + cosh(ax)))/a
    - sinh-asinh: s(x) = sinh(a / asinh x)
    """

    kind: str
    param: float = 1.0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown self-inverse kind {self.kind!r}; choose from {_KINDS}")
        if not (self.param > 0 and math.isfinite(self.param)):
            raise ValueError(f"parameter must be positive, got {self.param!r}")

    @property
    def domain_start(self) -> float:
        return 1.0 if self.kind == "exp-log" else 0.0

    @property
    def fixed_point(self) -> float:
        """The x0 with s(x0) = x0."""
        p = self.param
        return {
            "reciprocal": math.sqrt(p),
            "log-expm1": math.log(2.0) / p,
            "exp-log": math.exp(math.sqrt(p)),
            "log-sinh-ratio": math.asinh(1.0) / p,
            "sinh-asinh": math.sinh(math.sqrt(p)),
        }[self.kind]

    def __call__(self, x: float) -> float:
        x = float(x)
        if not x > self.domain_start:
            if x == self.domain_start:
                return math.inf
            raise ValueError(f"{self.kind}: x = {x!r} outside ({self.domain_start}, inf)")
        p = self.param
        if math.isinf(x):
            return self.domain_start
        if self.kind == "reciprocal":
            return p / x
        if self.kind == "log-expm1":
            return -math.log(-math.expm1(-p * x)) / p
        if self.kind == "exp-log":
            return _exp(p / math.log(x))
        if self.kind == "log-sinh-ratio":
            z = 0.5 * p * x
            if z > 0.5:
                # tanh z = 1 - 2/(e^(2z) + 1)
                return -math.log1p(-2.0 / (_exp(2.0 * z) + 1.0)) / p
            return -math.log(math.tanh(z)) / p
        return math.sinh(p / math.asinh(x)) if p / math.asinh(x) < 710.0 else math.inf

    def gap(self, x: float) -> float:
        """x - s(x)."""
        return x - self(x)


def self_inverse(kind: SelfInverseFn, x: float) -> float:
    return kind(x)


def extended_check(
    s: SelfInverseFn, f: RealFunction, a: float = 1.0, tol: float = 1e-8, id: str = "extended"
) -> VerificationReport:
    """Check int_{c/a}^inf f([a x - s(a x)]^2) dx = (1/a) int_0^inf f(y^2) dy.

    ``c`` is the domain start of s (1 for exp-log, 0 otherwise).  The left
    side is split at the fixed point of s, scaled by 1/a.
    """
    if not a > 0.0:
        raise ValueError(f"need a > 0, got {a!r}")

    def lhs_f(x: float) -> float:
        ax = a * x
        if ax <= s.domain_start:
            return f(math.inf)
        y = s.gap(ax)
        return f(y * y)

    qt = quad_tol_for(tol)
    lo = s.domain_start / a
    lhs = guarded(integrate_with_splits, lhs_f, [s.fixed_point / a], qt, lo=lo)
    rhs = guarded(rhs_integral, f, a, qt)
    return compare(id, {"kind": s.kind, "param": s.param, "a": a}, lhs, rhs, tol)
