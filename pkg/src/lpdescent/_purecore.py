"""Pure-Python subset-XOR strata kernel (reference and fallback)."""

from __future__ import annotations

from typing import Sequence

from .errors import BudgetExceededError


def _canon(m: int, w: int) -> int:
    return min(m, m ^ w) if w else m


def strata(cols: Sequence[int], dims: Sequence[int], max_dim: int, parity: int,
           wmask: int, nbits: int, budget: int) -> tuple[dict[int, int], list[tuple[int, int]]]:
    """Minimal-dimension subsets per XOR class.

    Walks every subset of candidate columns (``dims`` sorted ascending) whose
    dimension sum is at most ``max_dim``. Among subsets whose sum has the
    given parity, it records the least sum reached by each XOR value (taken
    modulo ``wmask``) and returns every subset attaining it as a bitmask.
    """
    n = len(cols)
    best: dict[int, int] = {}
    visited = 0
    stack = [(0, 0, 0)]  # (start, xor, dim)
    while stack:
        start, x, d = stack.pop()
        visited += 1
        if visited > budget:
            raise BudgetExceededError(f"more than {budget} candidate parameters (max_dim={max_dim})")
        if d % 2 == parity:
            c = _canon(x, wmask)
            if best.get(c, max_dim + 1) > d:
                best[c] = d
        for j in range(start, n):
            nd = d + dims[j]
            if nd > max_dim:
                break
            stack.append((j + 1, x ^ cols[j], nd))
    hits: list[tuple[int, int]] = []
    stack2 = [(0, 0, 0, 0)]
    while stack2:
        start, x, d, s = stack2.pop()
        if d % 2 == parity and best[_canon(x, wmask)] == d:
            hits.append((_canon(x, wmask), s))
        for j in range(start, n):
            nd = d + dims[j]
            if nd > max_dim:
                break
            stack2.append((j + 1, x ^ cols[j], nd, s | (1 << j)))
    hits.sort()
    return best, hits
