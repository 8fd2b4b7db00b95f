"""Descent of discrete parameters and the first occurrence index.

Two independent routes produce the minimal-dimension descent set:

* :func:`first_occurrence_param` reads the forced part phi_sgn off the sign
  changes of chi and enumerates the short list of admissible complements psi;
* :func:`brute_force_descent` enumerates every multiplicity-free parameter of
  the opposite type over the universe and compares chi-star with chi.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from . import core
from .errors import ParameterError, PreconditionError
from .lparam import (
    CompCharacter,
    IrrWeilRep,
    LParameter,
    SDType,
    SimpleParam,
    Universe,
    c_class,
    component_group,
    discrete_part,
)
from .rootnum import E_block, chi_star_fast

DEFAULT_BUDGET = 20_000_000


@dataclass(frozen=True)
class DescClass:
    param: LParameter
    c_splits: bool

    def as_dict(self) -> dict:
        return {"blocks": self.param.as_list(), "dim": self.param.dim,
                "c_splits": self.c_splits}


@dataclass(frozen=True)
class DescentResult:
    ell0: int | None
    classes: tuple[DescClass, ...]
    exhausted_universe: bool = False
    conventional: bool = False

    def params(self) -> list[LParameter]:
        return [c.param for c in self.classes]

    def as_dict(self) -> dict:
        return {"ell0": self.ell0, "classes": [c.as_dict() for c in self.classes],
                "exhausted_universe": self.exhausted_universe,
                "conventional": self.conventional}


@dataclass(frozen=True)
class SgnSets:
    odd: dict[str, tuple[int, ...]] = field(default_factory=dict)   # keyed by rho_i
    even: dict[str, tuple[int, ...]] = field(default_factory=dict)  # keyed by varrho_i


@dataclass(frozen=True)
class Families:
    """Blocks of a discrete parameter grouped by their W_F-representation."""

    reps: dict[str, IrrWeilRep]
    even: dict[str, list[int]]  # rho -> sorted alphas of rho x mu_{2 alpha}
    odd: dict[str, list[int]]   # varrho -> sorted betas of varrho x mu_{2 beta + 1}


def families(phi: LParameter) -> Families:
    reps: dict[str, IrrWeilRep] = {}
    even: dict[str, list[int]] = defaultdict(list)
    odd: dict[str, list[int]] = defaultdict(list)
    for b in phi.good_parity():
        reps[b.rho.label] = b.rho
        if b.b % 2:
            odd[b.rho.label].append((b.b - 1) // 2)
        else:
            even[b.rho.label].append(b.b // 2)
    return Families(reps, {k: sorted(v) for k, v in sorted(even.items())},
                    {k: sorted(v) for k, v in sorted(odd.items())})


def _require_discrete(phi: LParameter) -> None:
    if not phi.is_discrete:
        raise ParameterError("a discrete parameter is required; apply discrete_part first")


def _as_char_of(phi: LParameter, chi: CompCharacter) -> CompCharacter:
    gens = phi.good_parity()
    if chi.generators != gens:
        raise ParameterError("character does not match the parameter's component group")
    return chi


def sgn_sets(phi: LParameter, chi: CompCharacter) -> SgnSets:
    _require_discrete(phi)
    chi = _as_char_of(phi, chi)
    fam = families(phi)
    odd: dict[str, tuple[int, ...]] = {}
    for lab, alphas in fam.even.items():
        rho = fam.reps[lab]
        js = []
        for j in range(len(alphas)):
            blks = [SimpleParam(rho, 2 * alphas[j])]
            if j > 0:
                blks.append(SimpleParam(rho, 2 * alphas[j - 1]))
            if chi.on_blocks(blks) == -1:
                js.append(j)
        odd[lab] = tuple(js)
    even: dict[str, tuple[int, ...]] = {}
    for lab, betas in fam.odd.items():
        rho = fam.reps[lab]
        js = []
        for j in range(1, len(betas)):
            blks = [SimpleParam(rho, 2 * betas[j - 1] + 1), SimpleParam(rho, 2 * betas[j] + 1)]
            if chi.on_blocks(blks) == -1:
                js.append(j)
        even[lab] = tuple(js)
    return SgnSets(odd, even)


def phi_sgn(phi: LParameter, chi: CompCharacter) -> LParameter:
    s = sgn_sets(phi, chi)
    fam = families(phi)
    blocks = []
    for lab, js in s.odd.items():
        alphas = [0] + fam.even[lab]
        blocks += [SimpleParam(fam.reps[lab], 2 * alphas[j] + 1) for j in js]
    for lab, js in s.even.items():
        betas = fam.odd[lab]
        blocks += [SimpleParam(fam.reps[lab], 2 * betas[j - 1] + 2) for j in js]
    return LParameter.build(blocks, phi.kind.flipped(), phi.field)


@dataclass(frozen=True)
class DaggerData:
    ceil_odd: LParameter
    dagger: LParameter
    iso: dict[SimpleParam, SimpleParam]


def dagger_data(phi: LParameter) -> DaggerData:
    _require_discrete(phi)
    fam = families(phi)
    ceil = [SimpleParam(fam.reps[lab], 2 * betas[-1] + 1) for lab, betas in fam.odd.items()]
    dag = [SimpleParam(fam.reps[lab], 1) for lab in fam.odd]
    return DaggerData(
        LParameter.build(ceil, phi.kind, phi.field),
        LParameter.build(dag, phi.kind, phi.field),
        dict(zip(ceil, dag)),
    )


def enumerate_psi(phi: LParameter, chi: CompCharacter, universe: Universe,
                  literal: bool = False) -> list[LParameter]:
    """All minimal-dimension complements psi with phi_sgn + psi in the descent.

    The odd-block test pairs phi-dagger with psi plus the odd blocks
    rho x mu_(2 alpha + 1) of phi_sgn, since those blocks also meet every
    varrho x mu_(2 beta + 1) slot. ``literal=True`` drops them and pairs
    phi-dagger with psi alone; that variant is kept only to exhibit the cases
    where it accepts a psi whose sum with phi_sgn does not reproduce chi.
    """
    _require_discrete(phi)
    if phi.dim % 2:
        raise PreconditionError("the parameter must have even dimension")
    fam = families(phi)
    s = sgn_sets(phi, chi)
    psi_kind = phi.kind.flipped()
    parity_target = sum(len(s.odd[lab]) * fam.reps[lab].dim for lab in fam.even) % 2
    dd = dagger_data(phi)
    sg_odd = [] if literal else [b for b in phi_sgn(phi, chi).block_list() if b.b % 2]
    slot = dict(zip(chi.generators, chi.signs))
    ceil_signs = [slot[b] for b in dd.ceil_odd.good_parity()]
    ceil_parity = component_group(dd.ceil_odd).parity

    deltas = [r for r in universe if r.sd_type is psi_kind and r.label not in fam.even]
    tops = [SimpleParam(fam.reps[lab], 2 * al[-1] + 1) for lab, al in fam.even.items()]
    tops += [SimpleParam(fam.reps[lab], 2 * be[-1] + 2) for lab, be in fam.odd.items()]
    options = [SimpleParam(d, 1) for d in deltas] + tops

    # chi-star is multiplicative in the blocks of psi, so each option is a
    # sign column over the dagger slots and psi is a subset with a given XOR.
    def column(blks: list[SimpleParam]) -> int:
        if dd.dagger.is_zero or not blks:
            return 0
        part = LParameter.build(blks, psi_kind, phi.field)
        signs = chi_star_fast(dd.dagger, part, universe)[0].signs
        return sum(1 << i for i, v in enumerate(signs) if v == -1)

    options.sort(key=lambda o: (o.dim, o.sort_key))
    cols = [column([o]) for o in options]
    # via the isomorphism ceil -> dagger the slots are in the same order
    target = sum(1 << i for i, v in enumerate(ceil_signs) if v == -1) ^ column(sg_odd)
    wmask = sum(1 << i for i, w in enumerate(ceil_parity) if w) if ceil_parity else 0
    room = phi.dim - phi_sgn(phi, chi).dim
    if room < 0:
        return []
    best, hits = core.strata(cols, [o.dim for o in options], room, parity_target, wmask,
                             len(ceil_signs), DEFAULT_BUDGET)
    key = min(target, target ^ wmask) if wmask else target
    if key not in best:
        return []
    found = [LParameter.build([o for j, o in enumerate(options) if sub >> j & 1],
                              psi_kind, phi.field)
             for m, sub in hits if m == key]
    return sorted(found, key=LParameter.sort_key)


def _classes(params: list[LParameter]) -> tuple[DescClass, ...]:
    uniq = {p.sort_key(): p for p in params}
    return tuple(DescClass(uniq[k], c_class(uniq[k]).splits) for k in sorted(uniq))


def _lift_char(phi: LParameter, chi: CompCharacter) -> tuple[LParameter, CompCharacter]:
    """The discrete part together with chi viewed on it (same generators)."""
    p0 = discrete_part(phi)
    c0 = CompCharacter(p0.good_parity(), chi.signs, chi.domain,
                       component_group(p0).parity).normalized()
    return p0, c0


def first_occurrence_param(phi: LParameter, chi: CompCharacter, universe: Universe
                           ) -> DescentResult:
    chi = _as_char_of(phi, chi)
    if phi.dim % 2:
        raise PreconditionError("the parameter must have even dimension")
    return _first_occurrence(phi, chi, universe)


@lru_cache(maxsize=65536)
def _first_occurrence(phi: LParameter, chi: CompCharacter, universe: Universe
                      ) -> DescentResult:
    p0, c0 = _lift_char(phi, chi)
    sg = phi_sgn(p0, c0)
    psis = enumerate_psi(p0, c0, universe)
    conventional = c0.is_trivial()
    if not psis:
        # every admissible complement is too large: the universe is missing some delta
        return DescentResult(None, (), True, conventional)
    cls = _classes([psi + sg for psi in psis])
    return DescentResult((phi.dim - cls[0].param.dim) // 2, cls, False, conventional)


def descent_set(phi: LParameter, chi: CompCharacter, ell: int, universe: Universe
                ) -> DescentResult:
    if not 0 <= 2 * ell <= phi.dim:
        raise PreconditionError(f"ell = {ell} out of range for dim {phi.dim}")
    base = first_occurrence_param(phi, chi, universe)
    if base.ell0 is None or ell > base.ell0:
        return DescentResult(ell, (), base.exhausted_universe, base.conventional)
    if ell == base.ell0:
        return base
    need = base.ell0 - ell  # total dim of the tau's; each adds tau + tau^vee
    pads = _paddings(universe, need)
    if not pads:
        return DescentResult(ell, (), True, base.conventional)
    out = []
    for c in base.classes:
        for pad in pads:
            extra = [(SimpleParam(t, 1), 1) for t in pad]
            out.append(LParameter.build([*c.param.blocks, *extra], c.param.kind, c.param.field))
    return DescentResult(ell, _classes(out), False, base.conventional)


def _paddings(universe: Universe, need: int) -> list[tuple[IrrWeilRep, ...]]:
    nsd = [r for r in universe if not r.self_dual]
    out = []
    for k in range(1, need + 1):
        for combo in combinations_with_replacement(nsd, k):
            if sum(r.dim for r in combo) == need:
                out.append(combo)
    return out


# -- brute-force oracle ------------------------------------------------------

@dataclass(frozen=True)
class BruteTable:
    phi: LParameter
    candidates: tuple[SimpleParam, ...]
    best: dict[int, int]
    hits: dict[int, tuple[int, ...]]
    wmask: int

    def lookup(self, chi: CompCharacter) -> tuple[int | None, list[LParameter]]:
        m = 0
        for i, s in enumerate(chi.signs):
            if s == -1:
                m |= 1 << i
        if self.wmask:
            m = min(m, m ^ self.wmask)
        if m not in self.best:
            return None, []
        kind = self.phi.kind.flipped()
        params = []
        for sub in self.hits[m]:
            blks = [c for j, c in enumerate(self.candidates) if sub >> j & 1]
            params.append(LParameter.build(blks, kind, self.phi.field))
        return self.best[m], params


def candidate_blocks(kind: SDType, universe: Universe, max_dim: int) -> list[SimpleParam]:
    out = []
    for r in universe:
        if not r.self_dual:
            continue
        for b in range(1, max_dim // r.dim + 1):
            blk = SimpleParam(r, b)
            if blk.block_type is kind and blk.dim <= max_dim:
                out.append(blk)
    return sorted(out, key=lambda c: (c.dim, c.sort_key))


def brute_force_table(phi: LParameter, universe: Universe, max_dim: int | None = None,
                      budget: int = DEFAULT_BUDGET) -> BruteTable:
    _require_discrete(phi)
    return _brute_cached(phi, universe, phi.dim if max_dim is None else max_dim, budget)


@lru_cache(maxsize=4096)
def _brute_cached(phi: LParameter, universe: Universe, max_dim: int, budget: int) -> BruteTable:
    gens = phi.good_parity()
    cands = candidate_blocks(phi.kind.flipped(), universe, max_dim)
    cols = []
    for y in cands:
        m = 0
        for i, x in enumerate(gens):
            if E_block(x, y, universe) == -1:
                m |= 1 << i
        cols.append(m)
    parity = component_group(phi).parity
    wmask = sum(1 << i for i, w in enumerate(parity) if w) if parity else 0
    best, hits = core.strata(cols, [c.dim for c in cands], max_dim, phi.dim % 2,
                             wmask, len(gens), budget)
    grouped: dict[int, list[int]] = defaultdict(list)
    for m, sub in hits:
        grouped[m].append(sub)
    return BruteTable(phi, tuple(cands), best, {k: tuple(v) for k, v in grouped.items()}, wmask)


def brute_force_descent(phi: LParameter, chi: CompCharacter, universe: Universe,
                        max_dim: int | None = None, budget: int = DEFAULT_BUDGET
                        ) -> DescentResult:
    chi = _as_char_of(phi, chi)
    p0, c0 = _lift_char(phi, chi)
    table = brute_force_table(p0, universe, max_dim, budget)
    d, params = table.lookup(c0)
    conventional = c0.is_trivial()
    if d is None:
        return DescentResult(None, (), True, conventional)
    return DescentResult((phi.dim - d) // 2, _classes(params), False, conventional)
