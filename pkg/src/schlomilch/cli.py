"""Command-line front end.

Exit status is 0 when every check passes, 1 when a check fails and 2 for
usage or parse errors.  ``--json`` prints a JSON array of report objects
with the fields ``id, params, lhs, rhs, abs_err, rel_err, tol, pass, flags,
evaluations``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor

from . import catalog, expr
from . import distributions as dist
from . import identities as ids
from .report import VerificationReport, compare
from .transform import SelfInverseFn, TransformSpec, extended_check, verify_cs

TOL_RANGE = (1e-12, 1e-3)
DEFAULT_TOL = 1e-8

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

IDENTITY_DEFAULT_K = {"wz1": 200, "sevalues": 150, "lemma62": 100}


class UsageError(Exception):
    """Bad arguments discovered after parsing."""


def _tol(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    lo, hi = TOL_RANGE
    if not lo <= v <= hi:
        raise argparse.ArgumentTypeError(f"tol must lie in [{lo:g}, {hi:g}], got {text}")
    return v


def _assignment(text: str) -> tuple[str, float]:
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    try:
        return key.strip(), float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number in {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON array of reports")
    common.add_argument("--tol", type=_tol, default=DEFAULT_TOL, help="comparison tolerance (default 1e-8)")
    common.add_argument("--seed", type=int, default=42, help="random seed (default 42)")

    parser = argparse.ArgumentParser(
        prog="schlomilch", description="Verify Cauchy-Schloemilch integral identities numerically."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("verify", parents=[common], help="verify one catalog entry")
    p.add_argument("--entry", required=True)
    p.add_argument("--set", dest="overrides", type=_assignment, action="append", default=[], metavar="K=V")

    p = sub.add_parser("verify-all", parents=[common], help="verify every catalog entry")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("transform", parents=[common], help="check the classic transform for f(u)")
    p.add_argument("--f", required=True, help="expression in u, the squared argument")
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--b", type=float, default=1.0)

    p = sub.add_parser("extended", parents=[common], help="check a self-inverse transform for f(u)")
    p.add_argument("--kind", required=True, choices=_kinds())
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--f", required=True, help="expression in u, the squared argument")

    p = sub.add_parser("identity", parents=[common], help="run an exact or series identity suite")
    p.add_argument("--name", required=True, choices=["wz1", "sevalues", "lemma62", "hseries", "trigbessel", "derivs"])
    p.add_argument("--max-k", type=int, default=None)

    p = sub.add_parser("dist", parents=[common], help="check a transformation-of-scale distribution")
    p.add_argument("--family", required=True, choices=["rrig", "halft", "subbotin"])
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--param", type=float, default=None, help="nu for halft, n for subbotin")
    p.add_argument("--self-inverse", dest="self_inverse", choices=_kinds(), default=None,
                   help="use the extended mode with this self-inverse kind")
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--check", required=True, choices=["norm", "symmetry", "moments", "asymmetry"])
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--p", type=float, default=math.exp(-1.0))
    p.add_argument("-n", type=int, default=100_000)

    p = sub.add_parser("sample", parents=[common], help="draw from a classic distribution")
    p.add_argument("--family", required=True, choices=["rrig", "halft", "subbotin"])
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--param", type=float, default=None)
    p.add_argument("-n", type=int, required=True)

    sub.add_parser("list", parents=[common], help="list catalog entries")
    return parser


def _kinds() -> list[str]:
    from .transform import _KINDS

    return list(_KINDS)


# -- subcommands ---------------------------------------------------------------------------


def _verify(args) -> list[VerificationReport]:
    overrides = dict(args.overrides)
    return [catalog.verify_entry(args.entry, overrides, args.tol)]


def _verify_one(id_tol):
    return catalog.verify_entry(id_tol[0], None, id_tol[1])


def _verify_all(args) -> list[VerificationReport]:
    ids_ = [e.id for e in catalog.list_entries()]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            return list(pool.map(_verify_one, [(i, args.tol) for i in ids_]))
    return catalog.verify_all(args.tol)


def _user_f(text: str):
    return expr.compile(text, variable="u")


def _transform(args) -> list[VerificationReport]:
    try:
        spec = TransformSpec(args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    r = verify_cs(_user_f(args.f), spec, args.tol, id="transform")
    return [_with_params(r, f=args.f)]


def _extended(args) -> list[VerificationReport]:
    try:
        s = SelfInverseFn(args.kind, args.alpha)
        r = extended_check(s, _user_f(args.f), args.a, args.tol, id="extended")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return [_with_params(r, f=args.f)]


def _with_params(r: VerificationReport, **extra) -> VerificationReport:
    from dataclasses import replace

    return replace(r, params={**r.params, **extra})


def _exact_report(name: str, checker, max_k: int) -> VerificationReport:
    failures = [k for k in range(max_k + 1) if not checker(k)]
    total = max_k + 1
    return VerificationReport(
        id=name,
        params={"max_k": max_k},
        lhs=float(total - len(failures)),
        rhs=float(total),
        abs_err=float(len(failures)),
        rel_err=len(failures) / total,
        tol=0.0,
        passed=not failures,
        flags=("exact",),
        evaluations=total,
        details={"failures": failures[:20]},
    )


def _residual_report(name: str, params: dict, residual: float, tol: float) -> VerificationReport:
    return compare(name, params, residual, 0.0, tol)


def _identity(args) -> list[VerificationReport]:
    name = args.name
    if name in IDENTITY_DEFAULT_K:
        max_k = IDENTITY_DEFAULT_K[name] if args.max_k is None else args.max_k
        limit = ids.K_MAX_LEMMA if name == "lemma62" else ids.K_MAX
        if not 0 <= max_k <= limit:
            raise UsageError(f"--max-k must lie in [0, {limit}] for {name}")
        if name == "wz1":
            return [_exact_report("wz1", ids.wz1_check, max_k)]
        if name == "sevalues":
            return [_exact_report("sevalues", ids.se_so_check, max_k)]
        return [
            _exact_report("lemma62-sums", ids.lemma62_sums_check, max_k),
            _exact_report("lemma62-coefficients", ids.lemma62_coefficient_check, max_k),
        ]
    if args.max_k is not None:
        raise UsageError(f"--max-k does not apply to {name}")
    grid = [-2.0 + 4.0 * i / 19 for i in range(20)]
    if name == "hseries":
        worst = max(ids.h_series_identity_check(x) for x in grid)
        return [_residual_report("hseries", {"points": 20, "range": [-2, 2]}, worst, 1e-11)]
    if name == "trigbessel":
        worst = max(ids.trig_bessel_identity_check(c) for c in grid)
        quarter = [0.25 * i / 25 for i in range(26)]
        from . import specfun as sf

        hyp = max(abs(ids.g_series(u) - sf.hyp2f3(0.25, 0.75, 0.5, 1.0, 1.5, -4 * u * u)) for u in quarter)
        return [
            _residual_report("trigbessel", {"points": 20, "range": [-2, 2]}, worst, 1e-11),
            _residual_report("trigbessel-2F3", {"points": 26, "range": [0, 0.25]}, hyp, 1e-12),
        ]
    return [
        _residual_report(f"derivs:{c.name}", {"points": 50}, c.max_residual, c.tol)
        for c in ids.derivative_identity_checks()
    ]


def _distribution(args) -> dist.ScaleTransformDistribution:
    try:
        d = dist.family(args.family, args.b, args.param)
        if getattr(args, "self_inverse", None):
            d = dist.ScaleTransformDistribution.extended(d.parent, SelfInverseFn(args.self_inverse, args.alpha))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return d


def _dist(args) -> list[VerificationReport]:
    d = _distribution(args)
    if args.check == "norm":
        return [dist.normalization_check(d, args.tol)]
    if args.check == "symmetry":
        return list(dist.symmetry_checks(d).reports)
    if args.check == "moments":
        try:
            suite = dist.moment_checks(d, args.r, args.n, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        for note in suite.notices:
            print(f"note: {note}", file=sys.stderr)
        return list(suite.reports)
    try:
        value = dist.asymmetry(d, args.p)
        generic = dist.asymmetry_generic(d, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    params = {**dist._params(d), "p": args.p}
    out = [compare("asymmetry", params, value, generic, 1e-9, details={"generic": generic})]
    if d.is_classic and d.parent.kind == "half-gaussian":
        out.append(compare("asymmetry-closed-form", params, value, dist.rrig_asymmetry(d.b, args.p), 1e-9))
    grid = [0.01 + 0.98 * i / 49 for i in range(50)]
    vals = [dist.asymmetry(d, p) for p in grid]
    ok = all(0 < v < 1 for v in vals) and all(b < a for a, b in zip(vals, vals[1:]))
    out.append(
        VerificationReport("asymmetry-monotone", dist._params(d), vals[0], vals[-1], 0.0, 0.0, 0.0, ok, ("grid",), 0)
    )
    return out


def _sample(args, out) -> int:
    d = _distribution(args)
    if args.n < 0:
        raise UsageError("-n must be non-negative")
    draws = dist.sample(d, args.n, args.seed)
    if args.json:
        json.dump([float(x) for x in draws], out)
        out.write("\n")
    else:
        out.writelines(f"{x!r}\n" for x in draws.tolist())
    return EXIT_OK


def _list(args, out) -> int:
    if args.json:
        out.write(catalog.catalog_json() + "\n")
        return EXIT_OK
    for e in catalog.list_entries():
        params = ", ".join(f"{k}={p.default:g}" for k, p in e.params.items())
        flags = f" [{', '.join(e.flags)}]" if e.flags else ""
        out.write(f"{e.id:22s} {params}{flags}\n")
    return EXIT_OK


def _emit(reports: Sequence[VerificationReport], args, out) -> int:
    if args.json:
        out.write(catalog.reports_json(reports) + "\n")
    else:
        for r in reports:
            out.write(r.summary() + "\n")
            out.write(f"    lhs = {r.lhs!r}\n    rhs = {r.rhs!r}\n    |lhs - rhs| = {r.abs_err:.3g} (tol {r.tol:g})\n")
            ref = r.details.get("reference")
            if ref:
                out.write(f"    {ref}\n")
            if "printed_value" in r.details:
                out.write(f"    printed special-case value: {r.details['printed_value']!r}\n")
        passed = sum(r.passed for r in reports)
        out.write(f"{passed}/{len(reports)} passed\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


_HANDLERS = {
    "verify": _verify,
    "verify-all": _verify_all,
    "transform": _transform,
    "extended": _extended,
    "identity": _identity,
    "dist": _dist,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    """Run the command line ``argv`` and return the exit status."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "sample":
            return _sample(args, out)
        if args.command == "list":
            return _list(args, out)
        reports = _HANDLERS[args.command](args)
        return _emit(reports, args, out)
    except (UsageError, expr.ExprError, catalog.ConstraintError, catalog.UnknownEntryError,
            dist.SamplerUnavailableError) as exc:
        print(f"schlomilch {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))
