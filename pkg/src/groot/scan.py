"""Backend selection for the tau scan.

The compiled kernel is used when it imports and the inputs fit comfortably
in 64-bit arithmetic; otherwise the pure-Python scan runs.  Setting
``GROOT_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os

from . import _scan_py

try:
    if os.environ.get("GROOT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python requested")
    from . import _scan_c
except ImportError:
    _scan_c = None

BACKEND = "cython" if _scan_c is not None else "python"

# |n*w|, |tau| and |n*e0| must stay well inside int64.
_INT64_SAFE = 2**62


def _fits_int64(e0: int, alphas, horizon: int) -> bool:
    step = 1 + horizon * (abs(e0) + 3)
    return horizon * max(alphas) < _INT64_SAFE and horizon * step < _INT64_SAFE


def tau_extrema(e0: int, alphas, omegas, horizon: int, backend: str | None = None):
    """Dispatch to the requested or best available backend."""
    backend = backend or BACKEND
    if backend == "cython":
        if _scan_c is None:
            raise RuntimeError("compiled scan kernel is not available")
        if _fits_int64(e0, alphas, horizon):
            return _scan_c.tau_extrema(e0, tuple(alphas), tuple(omegas), horizon)
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _scan_py.tau_extrema(e0, tuple(alphas), tuple(omegas), horizon)
