"""Compare the compiled and pure-Python kernels.

Usage::

    python3 benchmarks/bench_backends.py [--repeat N]

Each kernel is timed directly from both modules.  The end-to-end rows run
``verify-all`` in a child process with and without ``SCHLOMILCH_PURE=1``.
"""

from __future__ import annotations

import argparse
import math
import os
import subprocess
import sys
import timeit

import numpy as np

from schlomilch import _pykernels as py

try:
    from schlomilch import _ckernels as ck
except ImportError:  # pragma: no cover
    ck = None


def _kernel_cases(k):
    xs = [0.1 + 0.37 * i for i in range(50)]
    rng = np.random.default_rng(0)
    y = np.abs(rng.standard_normal(100_000))
    u = rng.random(100_000)
    gauss = lambda x: math.exp(-x * x)
    return {
        "gamma_pos x50": lambda: [k.gamma_pos(x) for x in xs],
        "erfc x50": lambda: [k.erfc(x) for x in xs],
        "sine_integral x50": lambda: [k.sine_integral(x) for x in xs],
        "eta x50": lambda: [k.eta(x) for x in xs],
        "carlson_rf x50": lambda: [k.carlson_rf(0.0, x, x + 1.0) for x in xs],
        "de_integrate exp-sinh": lambda: k.de_integrate(gauss, 0.0, math.inf, py.EXP_SINH, 1e-12, 2, 10),
        "de_integrate tanh-sinh": lambda: k.de_integrate(math.log, 0.0, 1.0, py.TANH_SINH, 1e-12, 2, 10),
        "branch_select 1e5": lambda: k.branch_select(y, 1.0, u),
    }


def _best(fn, repeat: int) -> float:
    number = max(1, int(0.05 / max(timeit.timeit(fn, number=1), 1e-7)))
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def _end_to_end(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["SCHLOMILCH_PURE"] = "1"
    code = (
        "import time; from schlomilch import catalog; t = time.perf_counter(); "
        "catalog.verify_all(1e-8); print(time.perf_counter() - t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if ck is None:
        sys.exit("compiled extension not built; run pip install -e . --no-build-isolation")

    pure, compiled = _kernel_cases(py), _kernel_cases(ck)
    print(f"{'kernel':26s} {'python':>12s} {'cython':>12s} {'speedup':>8s}")
    for name in pure:
        tp = _best(pure[name], args.repeat)
        tc = _best(compiled[name], args.repeat)
        print(f"{name:26s} {tp * 1e6:10.1f}us {tc * 1e6:10.1f}us {tp / tc:7.1f}x")
    tp, tc = _end_to_end(True), _end_to_end(False)
    print(f"{'verify-all (catalog)':26s} {tp * 1e3:10.1f}ms {tc * 1e3:10.1f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
