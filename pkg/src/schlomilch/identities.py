"""Exact and high-precision checks of the binomial and Bessel series identities.

The binomial sums are compared in exact rational arithmetic.  The series
identities and the antiderivative relations are compared in floating point
against the special-function kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import specfun as sf

__all__ = [
    "DerivativeCheck",
    "derivative_identity_checks",
    "g_series",
    "h_series",
    "h_series_identity_check",
    "hyp_coefficient_check",
    "lemma62_coefficient_check",
    "lemma62_second_as_printed",
    "lemma62_sums_check",
    "se_so_check",
    "trig_bessel_identity_check",
    "wz1_check",
]

K_MAX = 1000
K_MAX_LEMMA = 300


def _check_k(k: int, bound: int) -> int:
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("k must be an integer")
    if not 0 <= k <= bound:
        raise ValueError(f"k must lie in [0, {bound}], got {k}")
    return k


# -- exact binomial sums ------------------------------------------------------------


def wz1_check(k: int) -> bool:
    """sum_j (-1)^j 2^-j C(k,j) C(j, floor(j/2)) == C(2k,k) / (2^k (k+1)), exactly."""
    _check_k(k, K_MAX)
    lhs = sum(
        Fraction((-1) ** j * comb(k, j) * comb(j, j // 2), 2**j) for j in range(k + 1)
    )
    return lhs == Fraction(comb(2 * k, k), 2**k * (k + 1))


def se_so_check(k: int) -> bool:
    """Even and odd parts of the sum above against their closed forms.

    S_e = sum_j C(k,2j) C(2j,j) / 4^j     = C(2k,k) / 2^k
    S_o = sum_j C(k,2j+1) C(2j+1,j) / 2^(2j+1) = k C(2k,k) / ((k+1) 2^k)
    """
    _check_k(k, K_MAX)
    se = sum(Fraction(comb(k, 2 * j) * comb(2 * j, j), 4**j) for j in range(k // 2 + 1))
    so = sum(
        Fraction(comb(k, 2 * j + 1) * comb(2 * j + 1, j), 2 ** (2 * j + 1))
        for j in range((k + 1) // 2)
    )
    central = comb(2 * k, k)
    return se == Fraction(central, 2**k) and so == Fraction(k * central, (k + 1) * 2**k)


def _lemma_first(k: int) -> tuple[Fraction, Fraction]:
    lhs = sum(
        Fraction(4**j, factorial(2 * j) * factorial(k - j) ** 2) for j in range(k + 1)
    )
    return lhs, Fraction(comb(4 * k, 2 * k), factorial(2 * k))


def _lemma_second(k: int, odd_factorial: bool = True) -> tuple[Fraction, Fraction]:
    lhs = sum(
        Fraction(
            4**j,
            factorial(2 * j + (1 if odd_factorial else 0)) * factorial(k - j) * factorial(k - j + 1),
        )
        for j in range(k + 1)
    )
    return lhs, Fraction((4 * k + 3) * comb(4 * k + 2, 2 * k + 1), factorial(2 * k + 3))


def lemma62_sums_check(k: int) -> bool:
    """The two binomial sums behind the trig-Bessel series, exactly.

    sum_j 4^j / ((2j)! (k-j)!^2)             = C(4k,2k) / (2k)!
    sum_j 4^j / ((2j+1)! (k-j)! (k-j+1)!)    = (4k+3) C(4k+2,2k+1) / (2k+3)!

    The second sum carries (2j+1)!, which is what the Cauchy product of
    J_1(2c) and sin(2c) produces; see :func:`lemma62_second_as_printed`.
    """
    _check_k(k, K_MAX_LEMMA)
    l1, r1 = _lemma_first(k)
    l2, r2 = _lemma_second(k)
    return l1 == r1 and l2 == r2


def lemma62_second_as_printed(k: int) -> bool:
    """The second sum with (2j)! in place of (2j+1)!; false for every k >= 1."""
    _check_k(k, K_MAX_LEMMA)
    lhs, rhs = _lemma_second(k, odd_factorial=False)
    return lhs == rhs


def lemma62_coefficient_check(k: int) -> bool:
    """Coefficient of (-1)^k c^(2k) in J0(2c)cos(2c) + J1(2c)sin(2c), exactly.

    It must equal C(4k,2k)/(2k+1)!, combining the two sums as
    A_k - 2 B_(k-1).
    """
    _check_k(k, K_MAX_LEMMA)
    a_k, _ = _lemma_first(k)
    b_prev = _lemma_second(k - 1)[0] if k >= 1 else Fraction(0)
    return a_k - 2 * b_prev == Fraction(comb(4 * k, 2 * k), factorial(2 * k + 1))


# -- series identities -----------------------------------------------------------------


def h_series(x: float, terms: int = 60) -> float:
    """sum_{n<terms} C(2n,n) x^n / (n+1)!."""
    total = 0.0
    term = 1.0  # C(0,0)/1!
    for n in range(terms):
        total += term
        # C(2n+2,n+1)/C(2n,n) = 2(2n+1)/(n+1); (n+1)!/(n+2)! = 1/(n+2)
        term *= x * 2.0 * (2 * n + 1) / ((n + 1) * (n + 2))
    return total


def h_series_identity_check(x: float, terms: int = 60) -> float:
    """|h(x) - e^(2x) (I0(2x) - I1(2x))| for |x| <= 2 and at least 40 terms."""
    if abs(x) > 2.0:
        raise ValueError(f"|x| must be <= 2, got {x!r}")
    if terms < 40:
        raise ValueError("at least 40 terms are required")
    closed = math.exp(2.0 * x) * (sf.bessel_i(0, 2.0 * x) - sf.bessel_i(1, 2.0 * x))
    return abs(h_series(x, terms) - closed)


def g_series(u: float, terms: int = 40) -> float:
    """sum_{k<terms} (-1)^k C(4k,2k) u^(2k) / (2k+1)!."""
    total = 0.0
    term = 1.0
    u2 = u * u
    for k in range(terms):
        total += term
        # ratio of consecutive coefficients, simplified
        term *= -u2 * (4 * k + 1) * (4 * k + 3) * 4.0 / ((2 * k + 1) * (2 * k + 2) ** 2 * (2 * k + 3))
    return total


def trig_bessel_identity_check(c: float, terms: int = 40) -> float:
    """Largest residual between the trig-Bessel series and its two closed forms.

    Compares the raw series with J0(2c) cos(2c) + J1(2c) sin(2c) and with
    2F3(1/4, 3/4; 1/2, 1, 3/2; -4c^2).  Requires |c| <= 2.
    """
    if abs(c) > 2.0:
        raise ValueError(f"|c| must be <= 2, got {c!r}")
    s = g_series(c, terms)
    bessel = sf.bessel_j(0, 2 * c) * math.cos(2 * c) + sf.bessel_j(1, 2 * c) * math.sin(2 * c)
    hyper = sf.hyp2f3(0.25, 0.75, 0.5, 1.0, 1.5, -4.0 * c * c)
    return max(abs(s - bessel), abs(s - hyper))


def hyp_coefficient_check(kmax: int = 40) -> float:
    """Largest relative gap between C(4k,2k)/(2k+1)! and its gamma-function form."""
    worst = 0.0
    for k in range(kmax + 1):
        exact = comb(4 * k, 2 * k) / factorial(2 * k + 1)
        gamma_form = math.exp(
            (2 * k - 1.5) * math.log(2.0)
            + sf.log_gamma(k + 0.25)
            + sf.log_gamma(k + 0.75)
            - sf.log_gamma(k + 0.5)
            - 2 * sf.log_gamma(k + 1.0)
            - sf.log_gamma(k + 1.5)
        )
        worst = max(worst, abs(gamma_form / exact - 1.0))
    return worst


# -- antiderivatives -----------------------------------------------------------------------


@dataclass(frozen=True)
class DerivativeCheck:
    name: str
    max_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol


def _bessel_exp_antiderivative(t: float) -> float:
    return t * math.exp(-t) * (sf.bessel_i(0, t) + sf.bessel_i(1, t))


def _bessel_exp_rate(t: float) -> float:
    return math.exp(-t) * sf.bessel_i(0, t)


def _cos_bessel_antiderivative(t: float) -> float:
    return t * (math.cos(t) * sf.bessel_j(0, t) + math.sin(t) * sf.bessel_j(1, t))


def _cos_bessel_rate(t: float) -> float:
    return math.cos(t) * sf.bessel_j(0, t)


def _si_bessel_antiderivative(x: float) -> float:
    return (2 * x * math.cos(x) - math.sin(x)) * sf.bessel_j(0, x) + 2 * x * math.sin(x) * sf.bessel_j(1, x)


def _si_bessel_rate(x: float) -> float:
    return sf.bessel_j(0, x) * math.cos(x) + sf.bessel_j(1, x) * math.sin(x)


DERIVATIVE_IDENTITIES = (
    ("bessel-exp", _bessel_exp_antiderivative, _bessel_exp_rate),
    ("cos-bessel", _cos_bessel_antiderivative, _cos_bessel_rate),
    ("sin-cos-bessel", _si_bessel_antiderivative, _si_bessel_rate),
)


def derivative_identity_checks(
    step: float = 1e-5, points: int = 50, tol: float = 1e-8
) -> list[DerivativeCheck]:
    """Check F' = f for the three antiderivative relations by central differences.

    Samples ``points`` equally spaced values in (0, 2].
    """
    grid = [2.0 * (i + 1) / points for i in range(points)]
    out = []
    for name, big, small in DERIVATIVE_IDENTITIES:
        worst = max(
            abs((big(t + step) - big(t - step)) / (2 * step) - small(t)) for t in grid
        )
        out.append(DerivativeCheck(name, worst, tol))
    return out
