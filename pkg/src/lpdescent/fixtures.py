"""Worked examples: SO(7) wave-front tables, unipotent and cuspidal families."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .field_model import FieldModel
from .lparam import (
    CompCharacter,
    EpsilonOracle,
    IrrWeilRep,
    LParameter,
    SDType,
    SimpleParam,
    Universe,
    all_characters,
    char_rep,
)

# Stable unipotent orbits of SO(7) in the closure order; it is total, so the
# largest part decides the partition whenever only one partition has it.
SO7_PARTITIONS = ((7,), (5, 1, 1), (3, 3, 1), (3, 2, 2), (3, 1, 1, 1, 1),
                  (2, 2, 1, 1, 1), (1,) * 7)


def known_partition(n_space: int, p1: int) -> list[int] | None:
    if n_space != 7:
        return None
    hits = [p for p in SO7_PARTITIONS if p[0] == p1]
    return list(hits[0]) if len(hits) == 1 else None


def char_universe(p: int) -> Universe:
    return Universe.with_characters(FieldModel.qp(p))


@dataclass(frozen=True)
class SO7Case:
    label: str
    param: LParameter
    char: CompCharacter
    ell0: int
    ell0_is_lower_bound: bool
    partition: tuple[int, ...] | None


def _zeta(signs: tuple[int, ...]) -> str:
    return "(" + ",".join("z+" if s == 1 else "z-" for s in signs) + ")"


def so7_cases(p: int = 5) -> tuple[Universe, list[SO7Case]]:
    """SO(7) with disc 1 at a prime where -1 is a square; chi_i distinct."""
    f = FieldModel.qp(p)
    if not f.minus_one_is_square():
        raise ValueError("the SO(7) examples assume -1 is a square")
    U = char_universe(p)
    c1, c2, c3 = (U.character(f.cls(x)) for x in ("1", "u", "pi"))
    out: list[SO7Case] = []

    t1 = LParameter.build([SimpleParam(c1, 4), SimpleParam(c2, 2)], SDType.SYMPLECTIC)
    order1 = [SimpleParam(c1, 4), SimpleParam(c2, 2)]
    for signs in ((1, 1), (-1, -1), (1, -1), (-1, 1)):
        chi = CompCharacter.make(t1, dict(zip(order1, signs)), "S")
        generic = signs == (1, 1)
        out.append(SO7Case("type1 " + _zeta(signs), t1, chi, 3 if generic else 2, False,
                           (7,) if generic else (5, 1, 1)))

    t2 = LParameter.build([SimpleParam(c, 2) for c in (c1, c2, c3)], SDType.SYMPLECTIC)
    order2 = [SimpleParam(c, 2) for c in (c1, c2, c3)]
    for signs in product((1, -1), repeat=3):
        chi = CompCharacter.make(t2, dict(zip(order2, signs)), "S")
        minus = signs.count(-1)
        if minus == 0:
            case = (3, False, (7,))
        elif minus in (1, 2):
            case = (2, False, (5, 1, 1))
        else:
            case = (1, True, None)
        out.append(SO7Case("type2 " + _zeta(signs), t2, chi, *case))
    return U, out


def so5_unipotent(p: int = 5) -> tuple[Universe, LParameter, CompCharacter]:
    """phi = 1 x mu_2 + xi_un x mu_2 with chi = (z-, z-)."""
    f = FieldModel.qp(p)
    U = char_universe(p)
    one, xi = U.character(f.one), U.character(f.unramified_nonsquare)
    phi = LParameter.build([SimpleParam(one, 2), SimpleParam(xi, 2)], SDType.SYMPLECTIC)
    return U, phi, CompCharacter.make(phi, [-1, -1], "S")


def unipotent_params(p: int, max_dim: int) -> tuple[Universe, list[LParameter]]:
    """Every discrete unipotent parameter of even dimension up to ``max_dim``."""
    f = FieldModel.qp(p)
    U = char_universe(p)
    one, xi = U.character(f.one), U.character(f.unramified_nonsquare)
    out = []
    for kind in (SDType.SYMPLECTIC, SDType.ORTHOGONAL):
        blocks = [SimpleParam(r, b) for r in (one, xi) for b in range(1, max_dim + 1)
                  if SimpleParam(r, b).block_type is kind]
        for k in range(1, len(blocks) + 1):
            for combo in combinations(blocks, k):
                d = sum(b.dim for b in combo)
                if d <= max_dim and d % 2 == 0:
                    out.append(LParameter.build(combo, kind, f))
    return U, out


def top_blocks(phi: LParameter) -> list[SimpleParam]:
    top: dict[str, SimpleParam] = {}
    for b in phi.good_parity():
        if b.rho.label not in top or b.b > top[b.rho.label].b:
            top[b.rho.label] = b
    return [top[k] for k in sorted(top)]


def top_normalized(phi: LParameter, chi: CompCharacter) -> bool:
    """chi is +1 on the sum of the top block of each family.

    When that sum lies outside S_phi the condition is vacuous: some extension
    of chi to A_phi satisfies it.
    """
    from .lparam import component_group

    G = component_group(phi)
    e = G.indicator(top_blocks(phi))
    return not G.in_S(e) or chi(e) == 1


# -- random cuspidal-shape data ---------------------------------------------

@dataclass(frozen=True)
class CuspidalCase:
    universe: Universe
    param: LParameter
    char: CompCharacter
    expected_ell0: int
    expected_sgn: LParameter


def random_mixed_universe(rng: random.Random, p: int = 5) -> Universe:
    f = FieldModel.qp(p)
    chars = [char_rep(c, "chi_" + c.name) for c in f]
    extra = []
    for i in range(rng.randint(1, 2)):
        extra.append(IrrWeilRep(f"sp{i}", 2 * rng.randint(1, 2), SDType.SYMPLECTIC, f.one))
    for i in range(rng.randint(0, 2)):
        extra.append(IrrWeilRep(f"or{i}", rng.randint(2, 3), SDType.ORTHOGONAL,
                                rng.choice(list(f))))
    reps = chars + extra
    table = {}
    for a in reps:
        for b in reps:
            if a.sd_type is SDType.ORTHOGONAL and b.sd_type is SDType.SYMPLECTIC:
                table[(a.label, b.label)] = rng.choice((1, -1))
    return Universe(f, reps, EpsilonOracle(table))


def random_cuspidal(rng: random.Random, universe: Universe, max_dim: int = 24
                    ) -> CuspidalCase | None:
    """A cuspidal-shape parameter with its distinguished character, or None."""
    kind = rng.choice((SDType.ORTHOGONAL, SDType.SYMPLECTIC))
    opp = [r for r in universe if r.sd_type is kind.flipped()]
    same = [r for r in universe if r.sd_type is kind]
    rng.shuffle(opp)
    rng.shuffle(same)
    rhos = opp[:rng.randint(0, min(2, len(opp)))]
    vrhos = same[:rng.randint(0, min(2, len(same)))]
    blocks, signs = [], {}
    r_of, s_of = {}, {}
    for rho in rhos:
        r = rng.randint(1, 3)
        r_of[rho.label] = r
        for j in range(1, r + 1):
            blk = SimpleParam(rho, 2 * j)
            blocks.append(blk)
            signs[blk] = -1 if (j + r) % 2 else 1
    for vr in vrhos:
        s = rng.randint(1, 3)
        s_of[vr.label] = s
        for j in range(1, s + 1):
            blk = SimpleParam(vr, 2 * j - 1)
            blocks.append(blk)
            signs[blk] = -1 if (j + s) % 2 else 1
    if not blocks:
        return None
    if sum(s_of[v.label] * v.dim for v in vrhos) % 2:
        return None
    phi = LParameter.build(blocks, kind, universe.field)
    if phi.dim > max_dim:
        return None
    chi = CompCharacter.make(phi, signs, "S")
    ell0 = sum(rho.dim * ((r_of[rho.label] + 1) // 2) for rho in rhos)
    ell0 += sum(s_of[v.label] * v.dim for v in vrhos) // 2
    sgn = []
    for rho in rhos:
        r = r_of[rho.label]
        sgn += [SimpleParam(rho, 2 * (r - j) + 1) for j in range(1, 2 * (r // 2) + 1)]
    for vr in vrhos:
        sgn += [SimpleParam(vr, 2 * j) for j in range(1, s_of[vr.label])]
    return CuspidalCase(universe, phi, chi, ell0,
                        LParameter.build(sgn, kind.flipped(), universe.field))


def all_fixture_chars(phi: LParameter) -> list[CompCharacter]:
    return all_characters(phi, "S")
