"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``LPDESCENT_PURE=1`` to force the pure-Python kernel.
"""

from __future__ import annotations

import os

from . import _purecore

BACKEND = "python"
_fast = None
if os.environ.get("LPDESCENT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _fastcore as _fast  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _fast = None


def strata(cols, dims, max_dim, parity, wmask, nbits, budget):
    if _fast is not None and len(cols) <= 64 and nbits <= 26:
        return _fast.strata(cols, dims, max_dim, parity, wmask, nbits, budget)
    return _purecore.strata(cols, dims, max_dim, parity, wmask, nbits, budget)


def pure_strata(cols, dims, max_dim, parity, wmask, nbits, budget):
    return _purecore.strata(cols, dims, max_dim, parity, wmask, nbits, budget)
