"""Formal L-parameters as multisets of Jordan blocks rho x mu_b."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import OracleMissingError, ParameterError, UniverseError
from .field_model import FieldModel, Sign, SquareClass, hilbert_symbol


class SDType(str, Enum):
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"
    NOT_SELF_DUAL = "not_self_dual"

    def flipped(self) -> "SDType":
        if self is SDType.ORTHOGONAL:
            return SDType.SYMPLECTIC
        if self is SDType.SYMPLECTIC:
            return SDType.ORTHOGONAL
        return self


@dataclass(frozen=True)
class IrrWeilRep:
    label: str
    dim: int
    sd_type: SDType
    det_class: SquareClass
    character_payload: SquareClass | None = None

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise UniverseError(f"{self.label}: dimension must be positive")
        if self.character_payload is not None:
            if self.dim != 1 or self.sd_type is not SDType.ORTHOGONAL:
                raise UniverseError(f"{self.label}: a character is 1-dim orthogonal")
            if self.det_class != self.character_payload:
                raise UniverseError(f"{self.label}: a character's det is itself")
        if self.dim == 1 and self.sd_type is SDType.SYMPLECTIC:
            raise UniverseError(f"{self.label}: no 1-dim symplectic representation")
        if self.sd_type is SDType.SYMPLECTIC:
            if self.dim % 2 or not self.det_class.is_trivial:
                raise UniverseError(f"{self.label}: symplectic needs even dim and det 1")
        if self.sd_type is SDType.NOT_SELF_DUAL and not self.det_class.is_trivial:
            # only the det of tau + tau-dual matters, which is trivial
            object.__setattr__(self, "det_class", self.det_class.field.one)

    @property
    def is_character(self) -> bool:
        return self.character_payload is not None

    @property
    def self_dual(self) -> bool:
        return self.sd_type is not SDType.NOT_SELF_DUAL


class EpsilonOracle:
    """Base root-number signs eps(rho x rho') for opposite-type pairs."""

    def __init__(self, table: Mapping[tuple[str, str], Sign] | None = None):
        self._t: dict[frozenset[str], Sign] = {}
        for (a, b), s in (table or {}).items():
            if s not in (1, -1):
                raise UniverseError(f"oracle sign for {a},{b} must be +-1")
            key = frozenset((a, b))
            if key in self._t and self._t[key] != s:
                raise UniverseError(f"conflicting oracle signs for {a},{b}")
            self._t[key] = s

    def get(self, a: str, b: str) -> Sign:
        try:
            return self._t[frozenset((a, b))]
        except KeyError:
            raise OracleMissingError(f"no base root number for ({a}, {b})") from None

    def has(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self._t

    def items(self) -> list[tuple[tuple[str, str], Sign]]:
        return sorted((tuple(sorted(k)), v) for k, v in self._t.items())  # type: ignore[misc]


class Universe:
    """All irreducible representations a session may use, plus the oracle."""

    def __init__(self, field: FieldModel, reps: Iterable[IrrWeilRep], oracle: EpsilonOracle):
        self.field = field
        self.reps: dict[str, IrrWeilRep] = {}
        for r in reps:
            if r.label in self.reps:
                raise UniverseError(f"duplicate label {r.label}")
            if r.det_class.field is not field:
                raise UniverseError(f"{r.label}: det class from another field model")
            self.reps[r.label] = r
        self.oracle = oracle
        for a, b in self.opposite_pairs():
            if not oracle.has(a.label, b.label):
                raise OracleMissingError(f"oracle lacks the pair ({a.label}, {b.label})")

    def opposite_pairs(self) -> Iterator[tuple[IrrWeilRep, IrrWeilRep]]:
        orth = [r for r in self if r.sd_type is SDType.ORTHOGONAL]
        symp = [r for r in self if r.sd_type is SDType.SYMPLECTIC]
        for a in orth:
            for b in symp:
                yield a, b

    def __iter__(self) -> Iterator[IrrWeilRep]:
        return iter(sorted(self.reps.values(), key=lambda r: r.label))

    def __getitem__(self, label: str) -> IrrWeilRep:
        try:
            return self.reps[label]
        except KeyError:
            raise UniverseError(f"unknown representation {label!r}") from None

    def of_type(self, t: SDType) -> list[IrrWeilRep]:
        return [r for r in self if r.sd_type is t]

    def character(self, a: SquareClass) -> IrrWeilRep | None:
        for r in self:
            if r.character_payload == a:
                return r
        return None

    @staticmethod
    def with_characters(field: FieldModel, extra: Iterable[IrrWeilRep] = (),
                        oracle: Mapping[tuple[str, str], Sign] | None = None,
                        prefix: str = "chi_") -> "Universe":
        """Every quadratic character of the field, plus extra representations."""
        reps = [char_rep(c, prefix + c.name) for c in field]
        return Universe(field, [*reps, *extra], EpsilonOracle(oracle))


def char_rep(a: SquareClass, label: str | None = None) -> IrrWeilRep:
    return IrrWeilRep(label or f"chi_{a.name}", 1, SDType.ORTHOGONAL, a, a)


@dataclass(frozen=True)
class SimpleParam:
    """The block rho x mu_b; not-self-dual blocks stand for (rho + rho^vee) x mu_b."""

    rho: IrrWeilRep
    b: int

    def __post_init__(self) -> None:
        if self.b < 1:
            raise ParameterError("mu_b needs b >= 1")

    @property
    def sort_key(self) -> tuple[str, int]:
        return (self.rho.label, self.b)

    def __lt__(self, other: "SimpleParam") -> bool:
        return self.sort_key < other.sort_key

    @property
    def block_type(self) -> SDType:
        return self.rho.sd_type if self.b % 2 else self.rho.sd_type.flipped()

    @property
    def dim(self) -> int:
        d = self.rho.dim * self.b
        return d if self.rho.self_dual else 2 * d

    @property
    def det(self) -> SquareClass:
        return self.rho.det_class ** self.b

    def __str__(self) -> str:
        return f"{self.rho.label}[{self.b}]"


@dataclass(frozen=True)
class LParameter:
    """A multiset of blocks with a declared ambient type.

    ``blocks`` is a canonically sorted tuple of (block, multiplicity).
    """

    blocks: tuple[tuple[SimpleParam, int], ...]
    kind: SDType
    field: FieldModel

    @staticmethod
    def build(blocks: Iterable[SimpleParam | tuple[SimpleParam, int]],
              kind: SDType | str | None = None,
              field: FieldModel | None = None) -> "LParameter":
        counts: dict[SimpleParam, int] = {}
        for item in blocks:
            blk, m = item if isinstance(item, tuple) else (item, 1)
            if m < 0:
                raise ParameterError("negative multiplicity")
            if m:
                counts[blk] = counts.get(blk, 0) + m
        if field is None:
            if not counts:
                raise ParameterError("an empty parameter needs an explicit field")
            field = next(iter(counts)).rho.det_class.field
        if kind is not None:
            kind = SDType(kind)
        odd_types = {b.block_type for b, m in counts.items() if b.rho.self_dual and m % 2}
        if kind is None:
            if len(odd_types) != 1:
                raise ParameterError("cannot infer the parameter type; declare it")
            kind = odd_types.pop()
        if kind is SDType.NOT_SELF_DUAL:
            raise ParameterError("a parameter must be orthogonal or symplectic")
        for blk, m in counts.items():
            if blk.rho.det_class.field is not field:
                raise ParameterError("blocks from different field models")
            if blk.rho.self_dual and blk.block_type is not kind and m % 2:
                raise ParameterError(
                    f"block {blk} has the wrong type and odd multiplicity; not self-dual"
                )
        ordered = tuple(sorted(counts.items(), key=lambda t: t[0].sort_key))
        return LParameter(ordered, kind, field)

    @staticmethod
    def zero(kind: SDType | str, field: FieldModel) -> "LParameter":
        return LParameter((), SDType(kind), field)

    # -- derived data ---------------------------------------------------
    @property
    def dim(self) -> int:
        return sum(b.dim * m for b, m in self.blocks)

    @property
    def det_class(self) -> SquareClass:
        d = self.field.one
        for b, m in self.blocks:
            if b.rho.self_dual:
                d = d * b.det ** m
        return d

    @property
    def is_zero(self) -> bool:
        return not self.blocks

    def good_parity(self) -> tuple[SimpleParam, ...]:
        return tuple(b for b, _ in self.blocks if b.rho.self_dual and b.block_type is self.kind)

    def bad_parity(self) -> tuple[SimpleParam, ...]:
        return tuple(b for b, _ in self.blocks if b.rho.self_dual and b.block_type is not self.kind)

    def not_self_dual(self) -> tuple[SimpleParam, ...]:
        return tuple(b for b, _ in self.blocks if not b.rho.self_dual)

    @property
    def is_discrete(self) -> bool:
        return all(m == 1 and b.rho.self_dual and b.block_type is self.kind
                   for b, m in self.blocks)

    def multiplicity(self, blk: SimpleParam) -> int:
        for b, m in self.blocks:
            if b == blk:
                return m
        return 0

    def block_list(self) -> list[SimpleParam]:
        return [b for b, m in self.blocks for _ in range(m)]

    def __add__(self, other: "LParameter") -> "LParameter":
        if other.is_zero:
            return self
        if self.is_zero:
            return LParameter(other.blocks, other.kind if other.kind else self.kind, self.field)
        if other.kind is not self.kind:
            raise ParameterError("cannot add parameters of different types")
        return LParameter.build([*self.blocks, *other.blocks], self.kind, self.field)

    def contains(self, other: "LParameter") -> bool:
        return all(self.multiplicity(b) >= m for b, m in other.blocks)

    def sort_key(self) -> tuple:
        return (self.dim, tuple((b.sort_key, m) for b, m in self.blocks))

    def __str__(self) -> str:
        if not self.blocks:
            return "0"
        parts = []
        for b, m in self.blocks:
            s = str(b) if b.rho.self_dual else f"({b}+dual)"
            parts.append(s if m == 1 else f"{m}*{s}")
        return " + ".join(parts)

    def as_list(self) -> list:
        return [[b.rho.label, b.b, m] for b, m in self.blocks]


def central_element(phi: LParameter) -> tuple[int, ...]:
    return tuple(phi.multiplicity(g) % 2 for g in phi.good_parity())


def discrete_part(phi: LParameter) -> LParameter:
    return LParameter(tuple((b, 1) for b in phi.good_parity()), phi.kind, phi.field)


# -- component groups and characters ------------------------------------

@dataclass(frozen=True)
class ComponentGroup:
    generators: tuple[SimpleParam, ...]
    parity: tuple[int, ...] | None  # dims mod 2 when S has index 2

    @property
    def order_A(self) -> int:
        return 2 ** len(self.generators)

    @property
    def order(self) -> int:
        return self.order_A // (2 if self.parity else 1)

    def in_S(self, e: Sequence[int]) -> bool:
        if self.parity is None:
            return True
        return sum(x * w for x, w in zip(e, self.parity)) % 2 == 0

    def elements(self, subgroup: str = "S") -> list[tuple[int, ...]]:
        els = list(product((0, 1), repeat=len(self.generators)))
        return [e for e in els if subgroup == "A" or self.in_S(e)]

    def unit(self, blk: SimpleParam) -> tuple[int, ...]:
        return tuple(int(g == blk) for g in self.generators)

    def indicator(self, blks: Iterable[SimpleParam]) -> tuple[int, ...]:
        s = set(blks)
        return tuple(int(g in s) for g in self.generators)


def component_group(phi: LParameter) -> ComponentGroup:
    gens = phi.good_parity()
    parity = None
    if phi.kind is SDType.ORTHOGONAL:
        dims = tuple(g.dim % 2 for g in gens)
        if any(dims):
            parity = dims
    return ComponentGroup(gens, parity)


@dataclass(frozen=True)
class CompCharacter:
    """A character of A_phi (domain "A") or S_phi (domain "S").

    ``signs`` are the values on the unit vectors of the good-parity slots. On
    S with index 2 the vector is only meaningful up to the parity character,
    so it is stored in a normal form: the first odd-dimensional slot is +1.
    """

    generators: tuple[SimpleParam, ...]
    signs: tuple[Sign, ...]
    domain: str
    parity: tuple[int, ...] | None = None

    @staticmethod
    def make(phi: LParameter, signs: Sequence[Sign] | Mapping[SimpleParam, Sign],
             domain: str = "A") -> "CompCharacter":
        G = component_group(phi)
        if isinstance(signs, Mapping):
            vals = tuple(int(signs.get(g, 1)) for g in G.generators)
            extra = set(signs) - set(G.generators)
            if extra:
                raise ParameterError(f"signs given for non-generators {sorted(map(str, extra))}")
        else:
            vals = tuple(int(s) for s in signs)
        if len(vals) != len(G.generators) or any(v not in (1, -1) for v in vals):
            raise ParameterError("character needs one sign per good-parity block")
        if domain not in ("A", "S"):
            raise ParameterError("domain must be A or S")
        return CompCharacter(G.generators, vals, domain, G.parity).normalized()

    @staticmethod
    def trivial(phi: LParameter, domain: str = "S") -> "CompCharacter":
        return CompCharacter.make(phi, [1] * len(phi.good_parity()), domain)

    def normalized(self) -> "CompCharacter":
        if self.domain != "S" or not self.parity:
            return self
        k = self.parity.index(1)
        if self.signs[k] == 1:
            return self
        flipped = tuple(-s if w else s for s, w in zip(self.signs, self.parity))
        return CompCharacter(self.generators, flipped, "S", self.parity)

    def restrict(self) -> "CompCharacter":
        return CompCharacter(self.generators, self.signs, "S", self.parity).normalized()

    def __call__(self, e: Sequence[int]) -> Sign:
        if self.domain == "S" and self.parity and sum(
                x * w for x, w in zip(e, self.parity)) % 2:
            raise ParameterError("element is not in S_phi")
        v = 1
        for x, s in zip(e, self.signs):
            if x:
                v *= s
        return v

    def on_blocks(self, blks: Iterable[SimpleParam]) -> Sign:
        s = set(blks)
        return self(tuple(int(g in s) for g in self.generators))

    def __mul__(self, other: "CompCharacter") -> "CompCharacter":
        if other.generators != self.generators:
            raise ParameterError("characters of different component groups")
        dom = "S" if "S" in (self.domain, other.domain) else "A"
        return CompCharacter(self.generators, tuple(a * b for a, b in zip(self.signs, other.signs)),
                             dom, self.parity).normalized()

    def is_trivial(self) -> bool:
        return all(s == 1 for s in self.restrict().signs)

    def same_on_S(self, other: "CompCharacter") -> bool:
        return self.restrict() == other.restrict()

    def value_at_one(self) -> Sign:
        """chi at (1, ..., 1), the central element of a discrete parameter."""
        return self(tuple(1 for _ in self.generators))

    def at_center(self, phi: "LParameter") -> Sign:
        """chi(z_phi); slot i of z_phi is the multiplicity of block i mod 2."""
        return self(central_element(phi))

    def as_list(self) -> list:
        return [[g.rho.label, g.b, s] for g, s in zip(self.generators, self.signs)]

    def __str__(self) -> str:
        body = ", ".join(f"{g}:{s:+d}" for g, s in zip(self.generators, self.signs))
        return f"{self.domain}{{{body}}}"


def all_characters(phi: LParameter, domain: str = "S") -> list[CompCharacter]:
    n = len(phi.good_parity())
    seen: dict[tuple, CompCharacter] = {}
    for signs in product((1, -1), repeat=n):
        c = CompCharacter.make(phi, signs, domain)
        seen.setdefault(c.signs, c)
    return [seen[k] for k in sorted(seen, reverse=True)]


def eta_twist(phi: LParameter, a: SquareClass) -> CompCharacter:
    """eta_a((e_i)) = prod (det phi_i, a)^(e_i)."""
    gens = phi.good_parity()
    return CompCharacter.make(phi, [hilbert_symbol(g.det, a) for g in gens], "A")


def z_orbit(phi: LParameter, chi: CompCharacter) -> list[CompCharacter]:
    out: dict[tuple, CompCharacter] = {}
    for a in phi.field:
        eta = eta_twist(phi, a)
        c = chi * eta
        if chi.domain == "S":
            c = c.restrict()
        else:
            c = CompCharacter(c.generators, c.signs, "A", c.parity)
        out.setdefault(c.signs, c)
    return [out[k] for k in sorted(out, reverse=True)]


@dataclass(frozen=True)
class CClass:
    splits: bool


def c_class(phi: LParameter) -> CClass:
    if phi.kind is not SDType.ORTHOGONAL or phi.dim % 2:
        return CClass(False)
    for b, _ in phi.blocks:
        if b.rho.self_dual and b.block_type is SDType.ORTHOGONAL and b.dim % 2:
            return CClass(False)
    return CClass(True)
