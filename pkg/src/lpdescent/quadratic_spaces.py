"""Quadratic spaces over a p-adic field, up to isometry.

A space is the triple (dim, disc, hasse) with

    disc = (-1)^(n(n-1)/2) * det,      hasse = prod_{i <= j} (a_i, a_j)

for a diagonal form <a_1, ..., a_n>. The diagonal terms are included in the
Hasse product; every formula below depends on that convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import OrbitInfeasibleError, PreconditionError, RealizabilityError
from .field_model import FieldModel, Sign, SquareClass, hilbert_symbol as hs


@dataclass(frozen=True)
class QSpace:
    dim: int
    disc: SquareClass
    hasse: Sign

    @property
    def field(self) -> FieldModel:
        return self.disc.field

    def __str__(self) -> str:
        return f"(dim={self.dim}, disc={self.disc.name}, hasse={self.hasse:+d})"

    def as_dict(self) -> dict:
        return {"dim": self.dim, "disc": self.disc.name, "hasse": self.hasse}


@dataclass(frozen=True)
class OrbitChoice:
    """The orbit O_ell, recorded by ell and the class q(w0, w0)."""

    ell: int
    disc_O: SquareClass


def _sign_power(s: Sign, k: int) -> Sign:
    return s if k % 2 else 1


def _m1pow(field: FieldModel, k: int) -> SquareClass:
    return field.minus_one if k % 2 else field.one


def zero_space(field: FieldModel) -> QSpace:
    return QSpace(0, field.one, 1)


def from_diagonal(entries: Sequence[SquareClass]) -> QSpace:
    if not entries:
        raise PreconditionError("an empty diagonal needs an explicit field; use zero_space")
    field = entries[0].field
    n = len(entries)
    det = field.one
    for a in entries:
        det = det * a
    h = 1
    for i in range(n):
        for j in range(i, n):
            h *= hs(entries[i], entries[j])
    return QSpace(n, _m1pow(field, n * (n - 1) // 2) * det, h)


def line(a: SquareClass) -> QSpace:
    return from_diagonal([a])


def hyperbolic_plane(field: FieldModel) -> QSpace:
    return from_diagonal([field.one, field.minus_one])


def orthogonal_sum(W: QSpace, U: QSpace) -> QSpace:
    f = W.field
    a, b = W.dim, U.dim
    disc = _m1pow(f, a * b) * W.disc * U.disc
    twist = hs(_m1pow(f, a * (a - 1) // 2) * W.disc, _m1pow(f, b * (b - 1) // 2) * U.disc)
    return QSpace(a + b, disc, W.hasse * U.hasse * twist)


def split_odd_hasse(m: int, disc: SquareClass) -> Sign:
    """Hasse sign of the split space of dimension 2m + 1 and given disc."""
    f = disc.field
    return _sign_power(hs(f.minus_one, f.minus_one), m * (m + 1) // 2) * hs(
        _m1pow(f, m + 1), disc
    )


def qd_hasse(n: int, a: SquareClass, disc: SquareClass) -> Sign:
    """Right-hand side (-1,-1)^(n(n+1)/2) ((-1)^n a, disc) of the (QD) condition."""
    f = a.field
    return _sign_power(hs(f.minus_one, f.minus_one), n * (n + 1) // 2) * hs(
        _m1pow(f, n) * a, disc
    )


def orbit_invariants(o: OrbitChoice) -> QSpace:
    return QSpace(2 * o.ell + 1, o.disc_O, split_odd_hasse(o.ell, o.disc_O))


def is_realizable(V: QSpace) -> bool:
    if V.dim < 0 or V.hasse not in (1, -1):
        return False
    f = V.field
    if V.dim == 0:
        return V.disc.is_trivial and V.hasse == 1
    if V.dim == 1:
        return V.hasse == hs(f.minus_one, V.disc)
    if V.dim == 2 and V.disc.is_trivial:
        return V.hasse == hyperbolic_plane(f).hasse
    return True


def _check(V: QSpace) -> None:
    if not is_realizable(V):
        raise RealizabilityError(f"no quadratic space with invariants {V}")


def descent_space(V: QSpace, o: OrbitChoice) -> QSpace:
    """Invariants of W_ell, the orthogonal complement of the orbit space in V."""
    _check(V)
    f = V.field
    n, ell = V.dim, o.ell
    if n < 2 * ell + 1:
        raise OrbitInfeasibleError(f"dim {n} is too small for ell = {ell}")
    disc = _m1pow(f, n - 1) * V.disc * o.disc_O
    hasse = (
        _sign_power(hs(f.minus_one, f.minus_one), ell * (ell + 1) // 2)
        * V.hasse
        * hs(_m1pow(f, ell) * o.disc_O, _m1pow(f, n * (n - 1) // 2 + ell) * V.disc)
    )
    W = QSpace(n - 2 * ell - 1, disc, hasse)
    if not is_realizable(W):
        raise OrbitInfeasibleError(
            f"V = {V} has no orbit with ell = {ell} and disc {o.disc_O.name}"
        )
    return W


def realizable_spaces(field: FieldModel, dim: int) -> list[QSpace]:
    out = [QSpace(dim, d, h) for d in field for h in (1, -1)]
    return [V for V in out if is_realizable(V)]


@dataclass(frozen=True)
class WittData:
    witt: int
    aniso_dim: int


def witt_index(V: QSpace) -> WittData:
    _check(V)
    f = V.field
    H = hyperbolic_plane(f)
    for aniso in range(V.dim % 2, min(V.dim, 4) + 1, 2):
        m = (V.dim - aniso) // 2
        hm = zero_space(f)
        for _ in range(m):
            hm = orthogonal_sum(hm, H)
        for A in realizable_spaces(f, aniso):
            if orthogonal_sum(hm, A) == V:
                return WittData(m, aniso)
    raise RealizabilityError(f"cannot classify {V}")


def satisfies_QD(V: QSpace, a: SquareClass) -> bool:
    if V.dim % 2:
        raise PreconditionError("(QD) is defined for even-dimensional spaces")
    return V.hasse == qd_hasse(V.dim // 2, a, V.disc)


def pure_inner_forms(field: FieldModel, dim: int, disc: SquareClass) -> list[QSpace]:
    if dim < 1:
        raise PreconditionError("pure inner forms need dim >= 1")
    return [V for V in (QSpace(dim, disc, 1), QSpace(dim, disc, -1)) if is_realizable(V)]


def witness_diagonal(V: QSpace) -> list[SquareClass]:
    """A diagonal form realizing V: hyperbolic planes plus a short tail."""
    _check(V)
    f = V.field
    wd = witt_index(V)
    head: list[SquareClass] = []
    for _ in range(wd.witt):
        head += [f.one, f.minus_one]
    if wd.aniso_dim == 0:
        return head
    base = from_diagonal(head) if head else zero_space(f)
    for tail in product(list(f), repeat=wd.aniso_dim):
        if orthogonal_sum(base, from_diagonal(list(tail))) == V:
            return head + list(tail)
    raise RealizabilityError(f"no diagonal witness for {V}")
