"""Select the numerical kernel backend at import time.

The compiled extension is preferred.  Set ``SCHLOMILCH_PURE=1`` to force the
pure-Python kernels (used by the benchmark and the backend parity tests).
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("SCHLOMILCH_PURE") == "1":
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = _pykernels

BACKEND: str = kernels.BACKEND

__all__ = ["BACKEND", "kernels"]
