"""Backend selection for the hot enumeration kernels.

Two interchangeable implementations exist:

- ``jit``  -- numba ``@njit`` kernels on single-word bitsets (n <= 64);
- ``pure`` -- plain-Python integer bitsets, any vertex count.

The ``UCIR_KERNEL`` environment variable picks the backend at import time:
``numba``, ``pure``, or ``auto`` (default: numba when importable, with an
automatic per-call fallback to pure for graphs on more than 64 vertices).
Both backends implement the identical algorithm and return identical
witnesses; ``benchmarks/bench_kernels.py`` compares their speed.
"""

from __future__ import annotations

import os

from . import pure

KERNEL_ENV = "UCIR_KERNEL"

_choice = os.environ.get(KERNEL_ENV, "auto").strip().lower() or "auto"
if _choice not in ("auto", "numba", "pure"):
    raise ValueError(f"{KERNEL_ENV} must be one of auto/numba/pure, got {_choice!r}")

_jit = None
if _choice in ("auto", "numba"):
    try:
        from . import jit as _jit
    except ImportError:
        if _choice == "numba":
            raise
        _jit = None

_BACKEND = "numba" if _jit is not None else "pure"


def backend_name() -> str:
    """Active backend: ``"numba"`` or ``"pure"``."""
    return _BACKEND


def max_independent_set_mask(adj: tuple[int, ...], n: int) -> tuple[int, int]:
    """Dispatch to the active backend; see the backend modules for the contract."""
    if _jit is not None and n <= 64:
        import numpy as np

        size, mask = _jit.max_independent_set_mask(np.array(adj, dtype=np.uint64), n)
        return int(size), int(mask)
    return pure.max_independent_set_mask(adj, n)


def best_ratio_mask(adj: tuple[int, ...], n: int) -> tuple[int, int, int]:
    """Dispatch to the active backend; see the backend modules for the contract."""
    if _jit is not None and n <= 64:
        import numpy as np

        num, den, mask = _jit.best_ratio_mask(np.array(adj, dtype=np.uint64), n)
        return int(num), int(den), int(mask)
    return pure.best_ratio_mask(adj, n)
