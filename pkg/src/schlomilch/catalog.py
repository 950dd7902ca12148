"""Machine-checkable catalog of evaluated definite integrals.

Each entry pairs a parameterized integrand with a closed form built from
:mod:`schlomilch.specfun`.  Verifying an entry integrates the left side by
double-exponential quadrature and compares it with the right side.

Integrands are written to stay finite over the whole double-precision range
of abscissae.  Many of them are invariant under x -> 1/x up to the measure,
so they are evaluated through ``t = min(x, 1/x)``, which keeps every power
of x bounded.

Examples
--------
>>> r = verify_entry("single_param", {"c": 1.0})
>>> r.passed, abs(r.rhs - 0.8862269254527580) < 1e-15
(True, True)
"""

from __future__ import annotations

import json
import math
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field, replace
from typing import Any

from . import specfun as sf
from .quad import (
    QuadratureResult,
    integrate_finite,
    integrate_real_line,
    integrate_with_splits,
)
from .report import VerificationReport, compare, guarded, quad_tol_for
from .transform import SelfInverseFn

__all__ = [
    "ConstraintError",
    "IdentityEntry",
    "Integrand",
    "Param",
    "UnknownEntryError",
    "catalog_json",
    "get_entry",
    "list_entries",
    "reports_json",
    "verify_all",
    "verify_entry",
]

DEFAULT_TOL = 1e-8
PAIRWISE_TOL = 1e-9
DISCREPANCY = "paper-discrepancy"


class UnknownEntryError(KeyError):
    """No catalog entry has the requested id."""

    def __str__(self) -> str:
        return f"unknown catalog entry {self.args[0]!r}"


class ConstraintError(ValueError):
    """A parameter value violates the entry's constraints."""


@dataclass(frozen=True)
class Param:
    """Default value and admissible interval of one parameter."""

    default: float
    lo: float = -math.inf
    hi: float = math.inf
    lo_closed: bool = False
    hi_closed: bool = False
    integer: bool = False

    def admits(self, v: float) -> bool:
        if self.integer and v != int(v):
            return False
        above = v >= self.lo if self.lo_closed else v > self.lo
        below = v <= self.hi if self.hi_closed else v < self.hi
        return math.isfinite(v) and above and below

    def describe(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        kind = " integer" if self.integer else ""
        return f"{left}{self.lo:g}, {self.hi:g}{right}{kind}"


@dataclass(frozen=True)
class Integrand:
    """A left-hand side ready for quadrature.

    ``real_line`` integrates over the whole line, otherwise over [lo, hi]
    split at ``splits``.  The result is multiplied by ``scale``.
    """

    f: Callable[[float], float]
    lo: float = 0.0
    hi: float = math.inf
    splits: tuple[float, ...] = ()
    scale: float = 1.0
    real_line: bool = False

    def integrate(self, tol: float, norm: float = 1.0) -> QuadratureResult:
        """Integrate to absolute accuracy ``tol * norm``.

        The integrand is divided by ``norm`` first, so large values keep
        the quadrature tolerance inside its admissible range.
        """
        inner = min(max(tol / abs(self.scale), 1e-14), 1e-3)
        f = self.f if norm == 1.0 else (lambda x, g=self.f: g(x) / norm)
        if self.real_line:
            r = integrate_real_line(f, inner)
        elif not self.splits and math.isfinite(self.hi):
            r = integrate_finite(f, self.lo, self.hi, inner)
        else:
            r = integrate_with_splits(f, list(self.splits), inner, self.lo, self.hi)
        s = self.scale * norm
        return QuadratureResult(r.value * s, r.error_estimate * abs(s), r.evaluations, r.converged)


Extra = Callable[[Mapping[str, float], float, float], "tuple[list[str], dict[str, Any], bool]"]


@dataclass(frozen=True)
class IdentityEntry:
    """One catalogued identity lhs(params) = rhs(params).

    Attributes
    ----------
    reference : str
        The identity in words, with a table entry number where one exists.
    printed : callable or None
        A printed special-case value that disagrees with the general formula.
        Entries with it carry the discrepancy flag and are verified against
        ``rhs``.
    relation : callable or None
        Cross-parameter constraint; returns an error message or None.
    extra : callable or None
        Additional checks ``(params, quad_tol, tol) -> (flags, details, ok)``.
    """

    id: str
    params: Mapping[str, Param]
    lhs: Callable[[Mapping[str, float]], Integrand]
    rhs: Callable[[Mapping[str, float]], float]
    reference: str
    relation: Callable[[Mapping[str, float]], str | None] | None = None
    printed: Callable[[Mapping[str, float]], float] | None = None
    nuisance: tuple[str, tuple[float, ...]] | None = None
    extra: Extra | None = None
    flags: tuple[str, ...] = field(default=())

    def defaults(self) -> dict[str, float]:
        return {k: p.default for k, p in self.params.items()}

    def resolve(self, overrides: Mapping[str, float] | None = None) -> dict[str, float]:
        """Defaults updated by ``overrides``, with every constraint checked."""
        values = self.defaults()
        for k, v in (overrides or {}).items():
            if k not in self.params:
                raise ConstraintError(
                    f"{self.id}: unknown parameter {k!r}; expected one of {sorted(self.params)}"
                )
            values[k] = float(v)
        for k, v in values.items():
            p = self.params[k]
            if not p.admits(v):
                raise ConstraintError(f"{self.id}: {k} = {v!r} outside {p.describe()}")
            if p.integer:
                values[k] = int(v)
        if self.relation is not None:
            msg = self.relation(values)
            if msg:
                raise ConstraintError(f"{self.id}: {msg}")
        return values


# -- numerically careful building blocks --------------------------------------------


def _t(x: float) -> float:
    """min(x, 1/x), with 0 at both ends of (0, inf)."""
    if x == 0.0 or math.isinf(x):
        return 0.0
    return x if x <= 1.0 else 1.0 / x


def _q(x: float, a: float) -> float:
    """x^2 / (x^4 + 2 a x^2 + 1), invariant under x -> 1/x."""
    t = _t(x)
    t2 = t * t
    return t2 / (1.0 + t2 * (t2 + 2.0 * a))


def _log_q(x: float, a: float) -> float:
    t = _t(x)
    if t == 0.0:
        return -math.inf
    t2 = t * t
    return math.log(t2) - math.log1p(t2 * (t2 + 2.0 * a))


def _softplus(v: float) -> float:
    """log(1 + e^v) without overflow."""
    return max(v, 0.0) + math.log1p(math.exp(-abs(v)))


def _exp_neg_power(y2: float, n: int) -> float:
    """exp(-(y2)^n) for y2 >= 0, zero once the exponent passes the underflow point."""
    if y2 > 0.0 and n * math.log(y2) > math.log(746.0):
        return 0.0
    return math.exp(-(y2**n))


def _sech2(u: float) -> float:
    """1/cosh(u)^2 for u >= 0."""
    e = math.exp(-2.0 * u)
    return 4.0 * e / ((1.0 + e) * (1.0 + e))


def _cs_gauss(c: float) -> Callable[[float], float]:
    def f(x: float) -> float:
        if x == 0.0:
            return 0.0
        y = x - 1.0 / x
        return math.exp(-c * y * y)

    return f


def _c(p: Mapping[str, float]) -> float:
    """c = b / (8 (1 + a)); twice it is the Bessel argument."""
    return p["b"] / (8.0 * (1.0 + p["a"]))


# -- Laplace-type integrals --------------------------------------------------------------


def _gr_3_325_lhs(p):
    a, b = p["a"], p["b"]

    def f(x):
        if x == 0.0:
            return 0.0
        return math.exp(-a * x * x - b / (x * x))

    return Integrand(f, splits=((b / a) ** 0.25,))


def _gr_3_324_2_lhs(p):
    n, b = int(p["n"]), p["b"]

    def f(x):
        if x == 0.0:
            return 0.0
        y = x - b / x
        return _exp_neg_power(y * y, n)

    # the integrand is even, so the real line is twice the half-line
    return Integrand(f, splits=(math.sqrt(b),), scale=2.0)


def _sinh_laplace_lhs(p):
    c = p["c"]

    def f(u):
        if abs(u) > 350.0:
            return 0.0
        s = math.sinh(u)
        return math.exp(u - c * s * s)

    return Integrand(f, real_line=True)


# -- Laurent-polynomial compositions -------------------------------------------------------


def _laurent_x7_lhs(p):
    n = int(p["n"])

    def f(x):
        # e^{-w^{2n}} underflows long before the polynomial factor overflows
        if x == 0.0 or abs(math.log(x)) > 8.0 / 7.0:
            return 0.0
        w = x**7 - x**-7
        damp = _exp_neg_power(w * w, n)
        if damp == 0.0:
            return 0.0
        x2 = x * x
        return ((x2 + x**-6) * (x2 * x2 - x2 + 1.0) - 1.0) * damp

    return Integrand(f, splits=(1.0,))


def _laurent_x7_mixed_lhs(p):
    n = int(p["n"])

    def f(x):
        if x == 0.0 or abs(math.log(x)) > 8.0 / 7.0:
            return 0.0
        w = x + x**7 - 1.0 / x - x**-7
        damp = _exp_neg_power(w * w, n)
        if damp == 0.0:
            return 0.0
        x2 = x * x
        return (7.0 * (x2 + x**-6) * (x2 * x2 - x2 + 1.0) - 6.0) * damp

    return Integrand(f, splits=(1.0,))


_PRODUCT_CUT = 1e-18


def _product_nu_lhs(p):
    nu2 = p["nu"] ** 2

    def f(x):
        t = _t(x)
        if t < 1e-50:
            return 0.0
        # both factors are invariant under x -> 1/x
        z = t**3 - t**-3
        z2 = z * z
        weight = (t * t - 1.0 + 1.0 / (t * t))
        prod = 1.0
        scale = 1.0
        while scale * z2 >= _PRODUCT_CUT:
            prod *= 1.0 + z2 * scale
            if prod > 1e300:
                return 0.0
            scale *= nu2
        return weight / prod

    return Integrand(f, splits=(1.0,))


def _product_nu_rhs(p):
    nu = p["nu"]
    total, k = 0.0, 0
    while True:
        term = nu ** (k * (k + 1) // 2)
        total += term
        if term < 1e-17 * total:
            break
        k += 1
    return (math.pi / 6.0) / total


# -- the three-parameter family --------------------------------------------------------------


def _master_rhs(p):
    a, c = p["a"], p["c"]
    return 2.0 ** (-0.5 - c) * (1.0 + a) ** (0.5 - c) * sf.beta(c - 0.5, 0.5)


def _master_forms(a: float, c: float) -> dict[str, Callable[[float], float]]:
    """The four equal integrands; I1 takes its nuisance exponent separately."""

    def i2(x):
        if x == 0.0 or math.isinf(x):
            return 0.0
        return math.exp(c * _log_q(x, a) - 2.0 * math.log(x))

    def i3(x):
        if x == 0.0 or math.isinf(x):
            return 0.0
        return math.exp(c * _log_q(x, a))

    def i4(x):
        return 0.5 * (i3(x) + i2(x))

    return {"I2": i2, "I3": i3, "I4": i4}


def _master_i1(a: float, c: float, b: float) -> Callable[[float], float]:
    def i1(x):
        if x == 0.0 or math.isinf(x):
            return 0.0
        lx = math.log(x)
        return math.exp(c * _log_q(x, a) - 2.0 * lx + _softplus(2.0 * lx) - _softplus(b * lx))

    return i1


def _master_lhs(p):
    return Integrand(_master_i1(p["a"], p["c"], p["b"]), splits=(1.0,))


def _master_extra(p, qt, tol):
    """All four forms, I1 at three nuisance exponents, agreeing pairwise."""
    a, c = p["a"], p["c"]
    rhs = _master_rhs(p)
    qt = min(qt, 1e-11)
    forms = dict(_master_forms(a, c))
    for b in (1.0, 2.0, 7.0):
        forms[f"I1(b={b:g})"] = _master_i1(a, c, b)
    results = {
        name: guarded(Integrand(f, splits=(1.0,)).integrate, qt, _norm(rhs))
        for name, f in forms.items()
    }
    values = {k: r.value for k, r in results.items()}
    spread = max(values.values()) - min(values.values())
    flags = []
    ok = all(r.converged for r in results.values())
    if not ok:
        flags.append("form-not-converged")
    if not spread <= PAIRWISE_TOL * _norm(rhs):
        flags.append("forms-disagree")
        ok = False
    if any(not abs(v - rhs) <= tol * max(1.0, abs(rhs)) for v in values.values()):
        flags.append("form-mismatch")
        ok = False
    details = {"forms": values, "pairwise_spread": spread}
    return flags, details, ok


# -- Bessel, trigonometric and sine-integral families -----------------------------------------


def _q_integrand(p, outer: Callable[[float], float]) -> Integrand:
    a, b = p["a"], p["b"]
    return Integrand(lambda x: outer(b * _q(x, a)), splits=(1.0,))


def _bessel_exp_lhs(p):
    return _q_integrand(p, lambda v: -math.expm1(-v))


def _bessel_exp_rhs(p):
    a, b, c = p["a"], p["b"], _c(p)
    pre = math.pi * b * math.exp(-2.0 * c) / (2.0**1.5 * math.sqrt(1.0 + a))
    return pre * (sf.bessel_i(0, 2.0 * c) + sf.bessel_i(1, 2.0 * c))


def _trig_bessel(c: float) -> float:
    """J0(2c) cos 2c + J1(2c) sin 2c."""
    return sf.bessel_j(0, 2.0 * c) * math.cos(2.0 * c) + sf.bessel_j(1, 2.0 * c) * math.sin(2.0 * c)


def _sin_lhs(p):
    return _q_integrand(p, math.sin)


def _sin_rhs(p):
    a, b = p["a"], p["b"]
    return math.pi * b / math.sqrt(8.0 * (1.0 + a)) * _trig_bessel(_c(p))


def _sin_laurent_lhs(_p):
    def f(x):
        t = _t(x)
        if t < 1e-100:
            return 0.0
        u = t**6
        ratio = (u - 2.0 * u * u + u**3) / (1.0 - 4.0 * u + 7.0 * u * u - 4.0 * u**3 + u**4)
        return (t * t + 1.0 / (t * t) - 1.0) * math.sin(ratio)

    return Integrand(f, splits=(1.0,))


def _si_lhs(p):
    return _q_integrand(p, sf.sine_integral)


def _si_rhs(p):
    a, c = p["a"], _c(p)
    two_c = 2.0 * c
    j0, j1 = sf.bessel_j(0, two_c), sf.bessel_j(1, two_c)
    bracket = (4.0 * c * math.cos(two_c) - math.sin(two_c)) * j0 + 4.0 * c * math.sin(two_c) * j1
    return math.pi * math.sqrt(2.0 * (1.0 + a)) * bracket


def _si_a0b1_printed(_p):
    q = 0.25
    j0, j1 = sf.bessel_j(0, q), sf.bessel_j(1, q)
    return math.pi / (2.0 * math.sqrt(2.0)) * (j0 * (math.cos(q) - 2.0 * math.sin(q)) + j1 * math.sin(q))


# -- zeta and error-function families ---------------------------------------------------------


def _zeta_main_lhs(p):
    s = p["s"]

    def f(x):
        if x == 0.0:
            return 0.0
        u = x * x
        return math.exp((2.0 * s + 1.0) * math.log(x)) * _sech2(u) if u < 400.0 else 0.0

    return Integrand(f, splits=(1.0,))


def _zeta_main_rhs(p):
    s = p["s"]
    return 2.0**-s * sf.gamma(s + 1.0) * sf.eta(s)


def _zeta_half_rhs(_p):
    return -0.25 * (2.0 - math.sqrt(2.0)) * sf.zeta(0.5) * math.sqrt(math.pi)


def _zeta_rep_lhs(p):
    s = p["s"]

    def f(y):
        if y == 0.0:
            return 0.0
        u = y * y
        return math.exp((2.0 * s - 1.0) * math.log(y) - u) / (1.0 + math.exp(-u))

    return Integrand(f, splits=(1.0,))


def _zeta_rep_rhs(p):
    s = p["s"]
    return 0.5 * sf.eta(s) * sf.gamma(s)


def _erf_466_lhs(p):
    mu2, beta2 = p["mu"] ** 2, p["beta"] ** 2
    return Integrand(lambda x: math.exp(-mu2 * x * x) / (x * x + beta2), splits=(p["beta"],))


def _erf_466_rhs(p):
    mu, beta = p["mu"], p["beta"]
    return math.pi / (2.0 * beta) * sf.erfc(mu * beta) * math.exp((mu * beta) ** 2)


def _erf_cs_lhs(p):
    a, mu2 = p["a"], p["mu"] ** 2

    def f(x):
        t = _t(x)
        if t == 0.0:
            return 0.0
        s = t * t + 1.0 / (t * t)
        return math.exp(-mu2 * s) / (s + 2.0 * a)

    return Integrand(f, splits=(1.0,))


def _erf_cs_rhs(p):
    a, mu = p["a"], p["mu"]
    r = math.sqrt(2.0 * (a + 1.0))
    return math.pi * math.exp(2.0 * a * mu * mu) / (2.0 * r) * sf.erfc(mu * r)


# -- elliptic families --------------------------------------------------------------------------


def _elliptic_first_lhs(p):
    a, b = p["a"], p["b"]

    def f(x):
        t = _t(x)
        if t == 0.0:
            return 0.0
        s = t * t + 1.0 / (t * t)
        return 1.0 / math.sqrt((s + 2.0 * a) * (s + 2.0 * b))

    return Integrand(f, splits=(1.0,))


def _elliptic_first_rhs(p):
    a, b = p["a"], p["b"]
    return sf.elliptic_k(math.sqrt((a - b) / (a + 1.0))) / math.sqrt(2.0 * (a + 1.0))


def _elliptic_incomplete_lhs(p):
    a, b, c = p["a"], p["b"], p["c"]

    def f(x):
        t = _t(x)
        t2 = t * t
        den = (1.0 + t2 * (t2 + 2.0 * a)) * (1.0 + t2 * (t2 + 2.0 * b)) * (1.0 + t2 * (t2 + 2.0 * c))
        return t * t2 / math.sqrt(den)

    return Integrand(f, splits=(1.0,))


def _elliptic_incomplete_rhs(p):
    a, b, c = p["a"], p["b"], p["c"]
    phi = math.asin(math.sqrt((c - a) / (c + 1.0)))
    k = math.sqrt((b - a) * (c + 1.0) / ((b + 1.0) * (c - a)))
    return sf.elliptic_f(phi, k) / (2.0 * math.sqrt((b + 1.0) * (c - a)))


def _hyper_lhs(p):
    al2, be2 = p["alpha"] ** 2, p["beta"] ** 2
    a2, b2 = p["a"] ** 2, p["b"] ** 2

    def cubic(t, g2):
        # t^3 + (g2 - 2a^2) t^2 + (a^4 - 2 g2 b^2) t + g2 b^4
        return ((t + g2 - 2.0 * a2) * t + a2 * a2 - 2.0 * g2 * b2) * t + g2 * b2 * b2

    def cubic_scaled(r, g2):
        # the same cubic divided by t^3, written in r = 1/t
        return 1.0 + r * ((g2 - 2.0 * a2) + r * ((a2 * a2 - 2.0 * g2 * b2) + r * g2 * b2 * b2))

    def f(t):
        if t == 0.0:
            return math.inf
        if t <= 1.0:
            return (t - b2) ** 2 / math.sqrt(t * cubic(t, al2) * cubic(t, be2))
        r = 1.0 / t
        return (1.0 - b2 * r) ** 2 / (t * math.sqrt(t) * math.sqrt(cubic_scaled(r, al2) * cubic_scaled(r, be2)))

    splits = tuple(sorted({b2, a2}))
    return Integrand(f, splits=splits)


def _hyper_rhs(p):
    al, be = p["alpha"], p["beta"]
    return 2.0 / al * sf.elliptic_k(math.sqrt(al * al - be * be) / al)


# -- self-inverse extensions -----------------------------------------------------------------------


def _self_inverse_gauss(kind: str) -> Callable[[Mapping[str, float]], Integrand]:
    def build(p):
        s = SelfInverseFn(kind, p["alpha"])

        def f(x):
            if x <= s.domain_start:
                return 0.0
            y = s.gap(x)
            return math.exp(-y * y) if math.isfinite(y) else 0.0

        return Integrand(f, lo=s.domain_start, splits=(s.fixed_point,))

    return build


def _half_sqrt_pi(_p) -> float:
    return 0.5 * math.sqrt(math.pi)


# -- the roster ---------------------------------------------------------------------------------------

def _pos(default: float, hi: float = math.inf) -> Param:
    return Param(default, 0.0, hi, hi_closed=math.isfinite(hi))


_ENTRIES: list[IdentityEntry] = [
    IdentityEntry(
        "normal",
        {},
        lambda p: Integrand(lambda x: math.exp(-x * x)),
        _half_sqrt_pi,
        "int_0^inf exp(-x^2) dx = sqrt(pi)/2",
    ),
    IdentityEntry(
        "gr_3_325",
        {"a": _pos(1.0, 100.0), "b": _pos(1.0, 100.0)},
        _gr_3_325_lhs,
        lambda p: 0.5 * math.sqrt(math.pi / p["a"]) * math.exp(-2.0 * math.sqrt(p["a"] * p["b"])),
        "table entry 3.325: int_0^inf exp(-a x^2 - b/x^2) dx = (1/2) sqrt(pi/a) exp(-2 sqrt(ab))",
    ),
    IdentityEntry(
        "single_param",
        {"c": _pos(1.0, 100.0)},
        lambda p: Integrand(_cs_gauss(p["c"]), splits=(1.0,)),
        lambda p: 0.5 * math.sqrt(math.pi / p["c"]),
        "int_0^inf exp(-c (t - 1/t)^2) dt = (1/2) sqrt(pi/c)",
    ),
    IdentityEntry(
        "gr_3_324_2",
        {"n": Param(1, 1, 4, True, True, integer=True), "b": _pos(1.0, 100.0)},
        _gr_3_324_2_lhs,
        lambda p: sf.gamma(1.0 / (2 * p["n"])) / p["n"],
        "table entry 3.324.2: int_R exp(-(x - b/x)^(2n)) dx = Gamma(1/(2n))/n",
        nuisance=("b", (0.5, 1.0, 2.0)),
    ),
    IdentityEntry(
        "sinh_laplace",
        {"c": _pos(1.0, 100.0)},
        _sinh_laplace_lhs,
        lambda p: math.sqrt(math.pi / p["c"]),
        "int_R exp(u - c sinh(u)^2) du = sqrt(pi/c)",
    ),
    IdentityEntry(
        "laurent_x7",
        {"n": Param(1, 1, 4, True, True, integer=True)},
        _laurent_x7_lhs,
        lambda p: sf.gamma(1.0 / (2 * p["n"])) / (14 * p["n"]),
        "int_0^inf [(x^2 + x^-6)(x^4 - x^2 + 1) - 1] exp(-(x^7 - x^-7)^(2n)) dx = Gamma(1/(2n))/(14n)",
    ),
    IdentityEntry(
        "laurent_x7_mixed",
        {"n": Param(1, 1, 4, True, True, integer=True)},
        _laurent_x7_mixed_lhs,
        lambda p: sf.gamma(1.0 / (2 * p["n"])) / (2 * p["n"]),
        "int_0^inf [7(x^2 + x^-6)(x^4 - x^2 + 1) - 6] exp(-(x + x^7 - x^-1 - x^-7)^(2n)) dx"
        " = Gamma(1/(2n))/(2n)",
    ),
    IdentityEntry(
        "product_nu",
        {"nu": Param(0.5, 0.0, 0.9, hi_closed=True)},
        _product_nu_lhs,
        _product_nu_rhs,
        "int_0^inf (x^4 - x^2 + 1)/x^2 prod_j [1 + (x^3 - x^-3)^2 nu^(2j)]^-1 dx"
        " = (pi/6) / (1 + nu + nu^3 + nu^6 + nu^10 + ...)",
    ),
    IdentityEntry(
        "master_4param",
        {"a": Param(1.0, -1.0, 1e6), "c": Param(1.0, 0.5, 50.0, hi_closed=True), "b": _pos(2.0, 20.0)},
        _master_lhs,
        _master_rhs,
        "I1 = I2 = I3 = I4 = 2^(-1/2-c) (1+a)^(1/2-c) B(c - 1/2, 1/2), I1 independent of b",
        extra=_master_extra,
    ),
    IdentityEntry(
        "bessel_exp",
        {"a": Param(0.5, -1.0, 1e6), "b": _pos(2.0, 100.0)},
        _bessel_exp_lhs,
        _bessel_exp_rhs,
        "int_0^inf (1 - exp(-b x^2/(x^4 + 2a x^2 + 1))) dx"
        " = pi b e^(-2c) (I0(2c) + I1(2c)) / (2^(3/2) sqrt(1+a)), c = b/(8(1+a))",
        relation=lambda p: None if _c(p) <= 15.0 else "b/(8(1+a)) must not exceed 15",
    ),
    IdentityEntry(
        "bessel_exp_a0b4",
        {},
        lambda p: _bessel_exp_lhs({"a": 0.0, "b": 4.0}),
        lambda p: math.pi * math.sqrt(2.0) / math.e * (sf.bessel_i(0, 1.0) + sf.bessel_i(1, 1.0)),
        "int_0^inf (1 - exp(-4x^2/(x^4 + 1))) dx = (pi sqrt(2)/e)(I0(1) + I1(1))",
    ),
    IdentityEntry(
        "bessel_exp_a1b8",
        {},
        lambda p: _bessel_exp_lhs({"a": 1.0, "b": 8.0}),
        lambda p: 2.0 * math.pi / math.e * (sf.bessel_i(0, 1.0) + sf.bessel_i(1, 1.0)),
        "int_0^inf (1 - exp(-8x^2/(x^2 + 1)^2)) dx = (2 pi/e)(I0(1) + I1(1))",
    ),
    IdentityEntry(
        "sin_master",
        {"a": Param(0.5, -1.0, 1e6), "b": _pos(1.0, 100.0)},
        _sin_lhs,
        _sin_rhs,
        "int_0^inf sin(b x^2/(x^4 + 2a x^2 + 1)) dx"
        " = pi b/sqrt(8(1+a)) [J0(2c) cos 2c + J1(2c) sin 2c]",
        relation=lambda p: None if _c(p) <= 15.0 else "b/(8(1+a)) must not exceed 15",
    ),
    IdentityEntry(
        "sin_a0b1",
        {},
        lambda p: _sin_lhs({"a": 0.0, "b": 1.0}),
        lambda p: math.pi / (2.0 * math.sqrt(2.0)) * _trig_bessel(0.125),
        "int_0^inf sin(x^2/(x^4 + 1)) dx = (pi/(2 sqrt 2)) [J0(1/4) cos(1/4) + J1(1/4) sin(1/4)]",
    ),
    IdentityEntry(
        "sin_a1b1",
        {},
        lambda p: _sin_lhs({"a": 1.0, "b": 1.0}),
        lambda p: math.pi / 4.0 * _trig_bessel(0.0625),
        "int_0^inf sin((x/(x^2 + 1))^2) dx = (pi/4) [J0(1/8) cos(1/8) + J1(1/8) sin(1/8)]",
    ),
    IdentityEntry(
        "sin_laurent",
        {},
        _sin_laurent_lhs,
        lambda p: math.pi / (6.0 * math.sqrt(2.0)) * _trig_bessel(0.125),
        "int_0^inf (x^2 + x^-2 - 1) sin((x^6 + x^-6 - 2)/(x^12 - 4x^6 - 4x^-6 + x^-12 + 7)) dx"
        " = (pi/(6 sqrt 2)) [J0(1/4) cos(1/4) + J1(1/4) sin(1/4)]",
    ),
    IdentityEntry(
        "si_master",
        {"a": Param(0.5, -1.0, 1e6), "b": _pos(1.0, 100.0)},
        _si_lhs,
        _si_rhs,
        "int_0^inf Si(b x^2/(x^4 + 2a x^2 + 1)) dx"
        " = pi sqrt(2(1+a)) [(4c cos 2c - sin 2c) J0(2c) + 4c sin 2c J1(2c)]",
        relation=lambda p: None
        if p["b"] / (2.0 * (1.0 + p["a"])) <= sf.SI_MAX and _c(p) <= 15.0
        else "b/(2(1+a)) must not exceed 8",
    ),
    IdentityEntry(
        "si_a0b1",
        {},
        lambda p: _si_lhs({"a": 0.0, "b": 1.0}),
        lambda p: _si_rhs({"a": 0.0, "b": 1.0}),
        "int_0^inf Si(x^2/(x^4 + 1)) dx; printed as"
        " (pi/(2 sqrt 2)) [J0(1/4)(cos(1/4) - 2 sin(1/4)) + J1(1/4) sin(1/4)],"
        " which is half the general formula",
        printed=_si_a0b1_printed,
        flags=(DISCREPANCY,),
    ),
    IdentityEntry(
        "si_a1b1",
        {},
        lambda p: _si_lhs({"a": 1.0, "b": 1.0}),
        lambda p: _si_rhs({"a": 1.0, "b": 1.0}),
        "int_0^inf Si((x/(x^2 + 1))^2) dx"
        " = (pi/2) [J0(1/8)(cos(1/8) - 4 sin(1/8)) + J1(1/8) sin(1/8)]",
    ),
    IdentityEntry(
        "zeta_main",
        {"s": Param(2.0, 0.0, 5.0, hi_closed=True)},
        _zeta_main_lhs,
        _zeta_main_rhs,
        "int_0^inf x^(2s+1)/cosh^2(x^2) dx = 2^-s (1 - 2^(1-s)) Gamma(s+1) zeta(s)",
        relation=lambda p: None if p["s"] >= sf.ZETA_RANGE[0] else "s must be at least 0.1",
    ),
    IdentityEntry(
        "zeta_half",
        {},
        lambda p: _zeta_main_lhs({"s": 0.5}),
        _zeta_half_rhs,
        "int_0^inf x^2/cosh^2(x^2) dx = -(1/4)(2 - sqrt 2) zeta(1/2) sqrt(pi)",
    ),
    IdentityEntry(
        "zeta_rep",
        {"s": Param(3.0, 1.0, 30.0, hi_closed=True)},
        _zeta_rep_lhs,
        _zeta_rep_rhs,
        "int_0^inf y^(2s-1)/(1 + exp(y^2)) dy = (1/2)(1 - 2^(1-s)) Gamma(s) zeta(s)",
    ),
    IdentityEntry(
        "erf_gr_3_466",
        {"mu": _pos(1.0, 5.0), "beta": _pos(1.0, 5.0)},
        _erf_466_lhs,
        _erf_466_rhs,
        "table entry 3.466.1: int_0^inf exp(-mu^2 x^2)/(x^2 + beta^2) dx"
        " = (pi/(2 beta)) (1 - erf(mu beta)) exp(mu^2 beta^2)",
    ),
    IdentityEntry(
        "erf_cs_general",
        {"a": Param(0.5, -1.0, 10.0, hi_closed=True), "mu": _pos(1.0, 3.0)},
        _erf_cs_lhs,
        _erf_cs_rhs,
        "int_0^inf exp(-mu^2 (x^2 + x^-2))/(x^2 + 2a + x^-2) dx"
        " = pi exp(2a mu^2)/(2 sqrt(2(a+1))) erfc(mu sqrt(2(a+1)))",
    ),
    IdentityEntry(
        "erf_a1mu1",
        {},
        lambda p: _erf_cs_lhs({"a": 1.0, "mu": 1.0}),
        lambda p: math.pi * math.e**2 / 4.0 * sf.erfc(2.0),
        "int_0^inf exp(-(x^2 + x^-2))/(x^2 + 2 + x^-2) dx = (pi e^2/4)(1 - erf 2)",
    ),
    IdentityEntry(
        "erf_a0mu1",
        {},
        lambda p: _erf_cs_lhs({"a": 0.0, "mu": 1.0}),
        lambda p: math.pi / (2.0 * math.sqrt(2.0)) * sf.erfc(math.sqrt(2.0)),
        "int_0^inf exp(-(x^2 + x^-2))/(x^2 + x^-2) dx = (pi/(2 sqrt 2))(1 - erf sqrt 2)",
    ),
    IdentityEntry(
        "elliptic_first",
        {"a": Param(2.0, -1.0, 1e6), "b": Param(0.5, -1.0, 1e6)},
        _elliptic_first_lhs,
        _elliptic_first_rhs,
        "int_0^inf x^2 dx / sqrt((x^4 + 2a x^2 + 1)(x^4 + 2b x^2 + 1))"
        " = K(sqrt((a-b)/(a+1))) / sqrt(2(a+1))",
        relation=lambda p: None if p["b"] <= p["a"] else "need b <= a",
    ),
    IdentityEntry(
        "elliptic_incomplete",
        {"a": Param(0.0, -1.0, 1e6), "b": Param(1.0, -1.0, 1e6), "c": Param(2.0, -1.0, 1e6)},
        _elliptic_incomplete_lhs,
        _elliptic_incomplete_rhs,
        "int_0^inf x^3 dx / sqrt(P_a P_b P_c), P_a = x^4 + 2a x^2 + 1,"
        " = F(asin sqrt((c-a)/(c+1)), sqrt((b-a)(c+1)/((b+1)(c-a)))) / (2 sqrt((b+1)(c-a)))",
        relation=lambda p: None if p["a"] <= p["b"] < p["c"] else "need a <= b < c",
    ),
    IdentityEntry(
        "hyperelliptic_n1",
        {
            "alpha": _pos(2.0, 1e3),
            "beta": _pos(1.0, 1e3),
            "a": _pos(2.0, 1e3),
            "b": _pos(1.0, 1e3),
        },
        _hyper_lhs,
        _hyper_rhs,
        "int_0^inf (t - b^2)^2 dt / sqrt(t P(t) Q(t)) = (2/alpha) K(sqrt(alpha^2 - beta^2)/alpha),"
        " P(t) = t^3 + (alpha^2 - 2a^2) t^2 + (a^4 - 2 alpha^2 b^2) t + alpha^2 b^4,"
        " Q the same with beta",
        relation=lambda p: None
        if p["alpha"] >= p["beta"] and p["a"] > p["b"]
        else "need alpha >= beta and a > b (negative residue at the pole b)",
    ),
    IdentityEntry(
        "jones_exp",
        {"alpha": _pos(1.0, 100.0)},
        _self_inverse_gauss("log-expm1"),
        _half_sqrt_pi,
        "int_0^inf exp(-log^2(e^(alpha x) - 1)/alpha^2) dx = sqrt(pi)/2",
    ),
    IdentityEntry(
        "jones_exp_log",
        {"alpha": _pos(1.0, 100.0)},
        _self_inverse_gauss("exp-log"),
        _half_sqrt_pi,
        "int_1^inf exp(-(x - exp(alpha/log x))^2) dx = sqrt(pi)/2",
    ),
    IdentityEntry(
        "jones_log_sinh",
        {"alpha": _pos(1.0, 100.0)},
        _self_inverse_gauss("log-sinh-ratio"),
        _half_sqrt_pi,
        "int_0^inf exp(-log^2(e^(alpha x) sinh(alpha x)/(1 + cosh(alpha x)))/alpha^2) dx = sqrt(pi)/2",
    ),
    IdentityEntry(
        "jones_sinh_asinh",
        {"alpha": _pos(1.0, 100.0)},
        _self_inverse_gauss("sinh-asinh"),
        _half_sqrt_pi,
        "int_0^inf exp(-(x - sinh(alpha/asinh x))^2) dx = sqrt(pi)/2",
    ),
]

_ENTRIES.sort(key=lambda e: e.id)
_BY_ID = {e.id: e for e in _ENTRIES}


# -- public API -------------------------------------------------------------------------------------


def list_entries() -> list[IdentityEntry]:
    """All entries, sorted by id."""
    return list(_ENTRIES)


def get_entry(id: str) -> IdentityEntry:
    try:
        return _BY_ID[id]
    except KeyError:
        raise UnknownEntryError(id) from None


def _norm(rhs: float) -> float:
    return max(1.0, abs(rhs)) if math.isfinite(rhs) else 1.0


def _sweep(entry: IdentityEntry, params: dict, rhs: float, qt: float, tol: float):
    name, values = entry.nuisance
    out = {}
    ok = True
    for v in values:
        r = guarded(entry.lhs({**params, name: v}).integrate, qt, _norm(rhs))
        out[f"{name}={v:g}"] = r.value
        ok &= r.converged and abs(r.value - rhs) <= tol * max(1.0, abs(rhs))
    return out, ok


def verify_entry(
    id: str, overrides: Mapping[str, float] | None = None, tol: float = DEFAULT_TOL
) -> VerificationReport:
    """Integrate an entry's left side and compare it with its closed form.

    Parameters
    ----------
    id : str
        Entry id, see :func:`list_entries`.
    overrides : mapping, optional
        Parameter values replacing the defaults.
    tol : float
        Pass threshold: ``|lhs - rhs| <= tol * max(1, |rhs|)``.

    Raises
    ------
    UnknownEntryError
        For an unknown id.
    ConstraintError
        If an override is unknown or violates a constraint.

    Notes
    -----
    Quadrature failures do not raise; they come back as a failed report.
    """
    entry = get_entry(id)
    params = entry.resolve(overrides)
    qt = quad_tol_for(tol)
    rhs = entry.rhs(params)
    norm = _norm(rhs)
    lhs = guarded(entry.lhs(params).integrate, qt, norm)
    flags = list(entry.flags)
    details: dict[str, Any] = {"reference": entry.reference}
    extra_ok = True
    if entry.printed is not None:
        printed = entry.printed(params)
        details["printed_value"] = printed
        details["printed_abs_err"] = abs(lhs.value - printed)
    if entry.nuisance is not None:
        sweep, sweep_ok = _sweep(entry, params, rhs, qt, tol)
        details["nuisance_sweep"] = sweep
        if not sweep_ok:
            flags.append("nuisance-dependent")
            extra_ok = False
    if entry.extra is not None:
        more, info, ok = entry.extra(params, qt, tol)
        flags.extend(more)
        details.update(info)
        extra_ok &= ok
    report = compare(entry.id, params, lhs, rhs, tol, flags, details=details)
    if report.passed and not extra_ok:
        report = replace(report, passed=False)
    return report


def verify_all(tol: float = DEFAULT_TOL, ids: Iterable[str] | None = None) -> list[VerificationReport]:
    """Verify every entry (or the given ids) at its defaults, in id order."""
    chosen = sorted(ids) if ids is not None else [e.id for e in _ENTRIES]
    return [verify_entry(i, None, tol) for i in chosen]


def reports_json(reports: Sequence[VerificationReport], indent: int | None = 2) -> str:
    """Serialize reports as the published JSON array."""
    return json.dumps([r.to_json() for r in reports], indent=indent)


def catalog_json(indent: int | None = 2) -> str:
    """Entry metadata (ids, parameters, references, flags) as JSON."""
    out = []
    for e in _ENTRIES:
        out.append(
            {
                "id": e.id,
                "parameters": {
                    k: {"default": p.default, "domain": p.describe()} for k, p in e.params.items()
                },
                "reference": e.reference,
                "flags": list(e.flags),
            }
        )
    return json.dumps(out, indent=indent)
