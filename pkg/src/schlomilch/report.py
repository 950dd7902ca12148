"""Outcome of checking one identity numerically."""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

from .quad import IntegrationError, QuadratureResult

__all__ = ["VerificationReport", "compare", "guarded", "quad_tol_for"]

JSON_FIELDS = ("id", "params", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass", "flags", "evaluations")


@dataclass(frozen=True)
class VerificationReport:
    """Both sides of an identity and whether they agree.

    ``passed`` holds iff every quadrature converged and
    ``abs_err <= tol * max(1, |rhs|)``.
    """

    id: str
    params: Mapping[str, Any]
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    tol: float
    passed: bool
    flags: tuple[str, ...] = ()
    evaluations: int = 0
    details: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def to_json(self) -> dict[str, Any]:
        """Plain dict with exactly the published report fields."""
        return {
            "id": self.id,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "lhs": _num(self.lhs),
            "rhs": _num(self.rhs),
            "abs_err": _num(self.abs_err),
            "rel_err": _num(self.rel_err),
            "tol": self.tol,
            "pass": self.passed,
            "flags": list(self.flags),
            "evaluations": self.evaluations,
        }

    def summary(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        extra = f" [{', '.join(self.flags)}]" if self.flags else ""
        return (
            f"{mark} {self.id}: lhs={self.lhs:.15g} rhs={self.rhs:.15g} "
            f"abs_err={self.abs_err:.3g}{extra}"
        )


def _num(x: float) -> float | str:
    # JSON has no inf/nan
    return x if math.isfinite(x) else repr(x)


def _jsonable(v: Any) -> Any:
    if isinstance(v, float):
        return _num(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def guarded(fn, *args, **kwargs) -> QuadratureResult:
    """Run a quadrature, turning an integration error into a failed result."""
    try:
        return fn(*args, **kwargs)
    except (IntegrationError, OverflowError, ZeroDivisionError):
        return QuadratureResult(math.nan, math.inf, 1, False)


def quad_tol_for(tol: float) -> float:
    """Quadrature tolerance leaving headroom under a comparison tolerance."""
    return min(max(tol / 10.0, 1e-14), 1e-3)


def compare(
    id: str,
    params: Mapping[str, Any],
    lhs: float | QuadratureResult,
    rhs: float | QuadratureResult,
    tol: float,
    flags: tuple[str, ...] | list[str] = (),
    evaluations: int = 0,
    details: Mapping[str, Any] | None = None,
) -> VerificationReport:
    """Build a report from two sides, each a number or a quadrature result."""
    flags = list(flags)
    converged = True
    for side, value in (("lhs", lhs), ("rhs", rhs)):
        if isinstance(value, QuadratureResult):
            evaluations += value.evaluations
            if not value.converged:
                converged = False
                flags.append(f"{side}-not-converged")
    lv = lhs.value if isinstance(lhs, QuadratureResult) else float(lhs)
    rv = rhs.value if isinstance(rhs, QuadratureResult) else float(rhs)
    abs_err = abs(lv - rv)
    if not math.isfinite(abs_err):
        flags.append("non-finite")
    rel_err = abs_err / abs(rv) if rv != 0.0 else abs_err
    ok = converged and math.isfinite(abs_err) and abs_err <= tol * max(1.0, abs(rv))
    return VerificationReport(
        id=id,
        params=dict(params),
        lhs=lv,
        rhs=rv,
        abs_err=abs_err,
        rel_err=rel_err,
        tol=tol,
        passed=bool(ok),
        flags=tuple(dict.fromkeys(flags)),
        evaluations=evaluations,
        details=dict(details or {}),
    )
