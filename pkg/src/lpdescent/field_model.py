"""Square classes F^x/F^x2 of a p-adic field and the Hilbert symbol.

The field is never modelled element by element. A class is an index into a
small elementary abelian 2-group whose group law is XOR on indices, and the
Hilbert symbol is a precomputed sign table.

For ``Q_p`` the canonical class list is

* p odd: ``1, u, pi, u*pi`` where ``u`` is the least positive non-residue,
* p = 2: ``1, -1, 2, -2, 5, -5, 10, -10``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import FieldDefinitionError, FieldMismatchError

Sign = int


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def qp_hilbert(p: int, a: int, b: int) -> Sign:
    """Hilbert symbol (a, b)_p for nonzero integers via the closed formulas."""
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero entries")
    alpha, beta = _valuation(a, p), _valuation(b, p)
    ua, ub = a // p**alpha, b // p**beta
    if p == 2:
        def eps(x: int) -> int:
            return ((x - 1) // 2) % 2

        def omega(x: int) -> int:
            return ((x * x - 1) // 8) % 2

        e = eps(ua) * eps(ub) + alpha * omega(ub) + beta * omega(ua)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        sign *= _legendre(ua, p)
    if alpha % 2:
        sign *= _legendre(ub, p)
    return sign


@dataclass(frozen=True, eq=False)
class FieldModel:
    """The group of square classes with its Hilbert pairing.

    Instances compare by identity; :meth:`qp` caches one model per prime so
    classes built in different places still agree.
    """

    p: int | None
    names: tuple[str, ...]
    reps: tuple[int, ...] | None
    pairing: tuple[tuple[Sign, ...], ...]
    minus_one_index: int
    uniformizer_index: int
    unit_indices: frozenset[int]

    def __post_init__(self) -> None:
        self._validate()

    # -- construction -------------------------------------------------
    @staticmethod
    @lru_cache(maxsize=None)
    def qp(p: int) -> "FieldModel":
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FieldDefinitionError(f"{p} is not prime")
        if p == 2:
            reps = (1, -1, 2, -2, 5, -5, 10, -10)
            names = tuple(str(r) for r in reps)
            minus_one, unif = 1, 2
            units = frozenset({0, 1, 4, 5})
        else:
            u = next(k for k in range(2, p) if _legendre(k, p) == -1)
            reps = (1, u, p, u * p)
            names = ("1", "u", "pi", "u*pi")
            minus_one = 0 if _legendre(-1, p) == 1 else 1
            unif, units = 2, frozenset({0, 1})
        table = tuple(tuple(qp_hilbert(p, a, b) for b in reps) for a in reps)
        return FieldModel(p, names, reps, table, minus_one, unif, units)

    @staticmethod
    def abstract(
        names: Sequence[str],
        pairing: Sequence[Sequence[int]],
        minus_one: str,
        uniformizer: str,
        units: Sequence[str],
    ) -> "FieldModel":
        """A field known only through its square-class group and pairing.

        Index ``i`` of ``names`` is the class whose group law is XOR, so the
        list length must be a power of two and ``names[0]`` the identity.
        """
        names = tuple(names)
        idx = {n: i for i, n in enumerate(names)}
        if len(idx) != len(names):
            raise FieldDefinitionError("duplicate class names")
        try:
            m1, un = idx[minus_one], idx[uniformizer]
            us = frozenset(idx[x] for x in units)
        except KeyError as exc:
            raise FieldDefinitionError(f"unknown class {exc}") from None
        table = tuple(tuple(int(s) for s in row) for row in pairing)
        return FieldModel(None, names, None, table, m1, un, us)

    def _validate(self) -> None:
        n = len(self.names)
        if n < 1 or n & (n - 1):
            raise FieldDefinitionError("class count must be a power of two")
        t = self.pairing
        if len(t) != n or any(len(row) != n for row in t):
            raise FieldDefinitionError("pairing table has the wrong shape")
        for a in range(n):
            if t[0][a] != 1:
                raise FieldDefinitionError("pairing with the trivial class must be +1")
            for b in range(n):
                if t[a][b] not in (1, -1) or t[a][b] != t[b][a]:
                    raise FieldDefinitionError("pairing must be a symmetric sign table")
                for c in range(n):
                    if t[a ^ b][c] != t[a][c] * t[b][c]:
                        raise FieldDefinitionError("pairing is not bimultiplicative")
            if a and all(t[a][b] == 1 for b in range(n)):
                raise FieldDefinitionError("pairing is degenerate")
            if t[a][a ^ self.minus_one_index] != 1:
                raise FieldDefinitionError("(a, -a) must be +1")
        if 0 not in self.unit_indices:
            raise FieldDefinitionError("the trivial class is a unit")

    # -- access -------------------------------------------------------
    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator["SquareClass"]:
        return (SquareClass(self, i) for i in range(len(self.names)))

    def __repr__(self) -> str:
        return f"FieldModel(p={self.p})" if self.p else f"FieldModel(abstract, {len(self)})"

    @property
    def one(self) -> "SquareClass":
        return SquareClass(self, 0)

    @property
    def minus_one(self) -> "SquareClass":
        return SquareClass(self, self.minus_one_index)

    @property
    def uniformizer(self) -> "SquareClass":
        return SquareClass(self, self.uniformizer_index)

    @property
    def unramified_nonsquare(self) -> "SquareClass":
        """The class a with (., a) the nontrivial unramified character."""
        for c in self:
            if c.index and all(self.pairing[c.index][u] == 1 for u in self.unit_indices):
                return c
        raise FieldDefinitionError("no unramified quadratic character")

    def minus_one_is_square(self) -> bool:
        return self.minus_one_index == 0

    def cls(self, x: "str | int | SquareClass") -> "SquareClass":
        """Parse a class from a canonical name, an integer, or a class."""
        if isinstance(x, SquareClass):
            if x.field is not self:
                raise FieldMismatchError("class belongs to another field model")
            return x
        if isinstance(x, str):
            if x in self.names:
                return SquareClass(self, self.names.index(x))
            try:
                x = int(x)
            except ValueError:
                raise FieldDefinitionError(f"unknown square class {x!r}") from None
        if self.reps is None or self.p is None:
            raise FieldDefinitionError("integer classes need a Q_p model")
        if x == 0:
            raise FieldDefinitionError("zero has no square class")
        return SquareClass(self, self._reduce(int(x)))

    def _reduce(self, n: int) -> int:
        p = self.p
        assert p is not None
        v = _valuation(n, p)
        unit = n // p**v
        if p == 2:
            r = unit % 8
            sign_bit = 1 if r in (3, 7) else 0
            five_bit = 1 if r in (3, 5) else 0
            return sign_bit + 2 * (v % 2) + 4 * five_bit
        return (1 if _legendre(unit, p) == -1 else 0) + 2 * (v % 2)


@dataclass(frozen=True, order=False)
class SquareClass:
    field: FieldModel
    index: int

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        if other.field is not self.field:
            raise FieldMismatchError("square classes from different field models")
        return SquareClass(self.field, self.index ^ other.index)

    def __neg__(self) -> "SquareClass":
        return self * self.field.minus_one

    def __pow__(self, k: int) -> "SquareClass":
        return self if k % 2 else self.field.one

    def __lt__(self, other: "SquareClass") -> bool:
        return self.index < other.index

    @property
    def name(self) -> str:
        return self.field.names[self.index]

    @property
    def is_trivial(self) -> bool:
        return self.index == 0

    def __repr__(self) -> str:
        return f"<{self.name}>"

    def __str__(self) -> str:
        return self.name


def hilbert_symbol(a: SquareClass, b: SquareClass) -> Sign:
    if a.field is not b.field:
        raise FieldMismatchError("Hilbert symbol of classes from different field models")
    return a.field.pairing[a.index][b.index]


@dataclass(frozen=True)
class QuadCharValues:
    at_minus_one: Sign
    at_uniformizer: Sign
    is_unramified: bool


def quad_char_values(a: SquareClass) -> QuadCharValues:
    """Values of the quadratic character x -> (x, a) at -1 and a uniformizer."""
    f = a.field
    unram = all(f.pairing[a.index][u] == 1 for u in f.unit_indices)
    return QuadCharValues(
        hilbert_symbol(f.minus_one, a), hilbert_symbol(f.uniformizer, a), unram
    )


def sign_at_minus_one(a: SquareClass) -> Sign:
    """chi_a(-1) = (-1, a)."""
    return hilbert_symbol(a.field.minus_one, a)
