"""Representations as (space, parameter, character) data and their descents."""

from __future__ import annotations

from dataclasses import dataclass, field

from .descent import DescentResult, first_occurrence_param
from .errors import (
    OrbitInfeasibleError,
    ParameterError,
    PreconditionError,
    RealizabilityError,
    RelevanceError,
)
from .field_model import SquareClass, hilbert_symbol
from .lparam import (
    CompCharacter,
    LParameter,
    SDType,
    Universe,
    c_class,
    discrete_part,
    eta_twist,
    z_orbit,
)
from .quadratic_spaces import (
    OrbitChoice,
    QSpace,
    descent_space,
    is_realizable,
    qd_hasse,
    split_odd_hasse,
)
from .rootnum import E_pair, chi_star_fast


@dataclass(frozen=True)
class ReprDatum:
    """pi_a(phi, chi) on SO(space); ``normalizer_a`` is None on odd spaces."""

    space: QSpace
    param: LParameter
    char: CompCharacter
    normalizer_a: SquareClass | None
    c_splits: bool

    @property
    def is_even(self) -> bool:
        return self.space.dim % 2 == 0

    def as_dict(self) -> dict:
        return {
            "space": self.space.as_dict(),
            "blocks": self.param.as_list(),
            "char": self.char.restrict().as_list(),
            "normalizer": None if self.normalizer_a is None else self.normalizer_a.name,
            "c_splits": self.c_splits,
        }


def make_repr(param: LParameter, char: CompCharacter, disc: SquareClass | None = None,
              a: SquareClass | None = None) -> ReprDatum:
    """Place (param, char) on the pure inner form singled out by the character.

    Symplectic parameters live on odd spaces of dim + 1 and need the
    discriminant; orthogonal ones on even spaces with disc = det(param),
    the Hasse sign fixed by the normalizer ``a``.
    """
    f = param.field
    if char.generators != param.good_parity():
        raise ParameterError("character does not match the parameter's component group")
    char = char.restrict()
    n = param.dim // 2
    if param.kind is SDType.SYMPLECTIC:
        if a is not None:
            raise PreconditionError("odd special orthogonal groups take no normalizer")
        disc = f.one if disc is None else disc
        space = QSpace(param.dim + 1, disc, split_odd_hasse(n, disc) * char.at_center(param))
        a_out = None
    else:
        if param.dim % 2:
            raise PreconditionError("an even special orthogonal group needs an even parameter")
        det = param.det_class
        if disc is not None and disc != det:
            raise RealizabilityError(f"disc {disc.name} differs from det(param) = {det.name}")
        a_out = f.one if a is None else a
        space = QSpace(param.dim, det, char.at_center(param) * qd_hasse(n, a_out, det))
    if not is_realizable(space):
        raise RealizabilityError(f"no pure inner form with invariants {space}")
    return ReprDatum(space, param, char, a_out, c_class(param).splits)


def renormalize(pi: ReprDatum, a: SquareClass) -> CompCharacter:
    """chi_a(pi) from chi_{a0}(pi): twist by eta_{a0 a}."""
    if pi.normalizer_a is None:
        return pi.char
    return (pi.char * eta_twist(pi.param, pi.normalizer_a * a)).restrict()


@dataclass(frozen=True)
class RepOccurrence:
    ell0: int | None          # parameter level: (dim phi - dim descent) / 2
    orbit_ell: int | None     # index of the orbit O_ell on the space
    exhausted_universe: bool
    witnesses: tuple[CompCharacter, ...] = ()

    def as_dict(self) -> dict:
        return {"ell0": self.ell0, "orbit_ell": self.orbit_ell,
                "exhausted_universe": self.exhausted_universe,
                "witnesses": [c.as_list() for c in self.witnesses]}


def _orbit_ell(pi: ReprDatum, ell0: int) -> int:
    return ell0 - 1 if pi.is_even else ell0


def first_occurrence_rep(pi: ReprDatum, universe: Universe) -> RepOccurrence:
    best: int | None = None
    wit: list[CompCharacter] = []
    exhausted = False
    chars = z_orbit(pi.param, pi.char) if pi.is_even else [pi.char]
    for chi in chars:
        r = first_occurrence_param(pi.param, chi, universe)
        exhausted |= r.exhausted_universe
        if r.ell0 is None:
            continue
        if best is None or r.ell0 > best:
            best, wit = r.ell0, [chi]
        elif r.ell0 == best:
            wit.append(chi)
    if best is None:
        return RepOccurrence(None, None, True)
    return RepOccurrence(best, _orbit_ell(pi, best), exhausted, tuple(wit))


@dataclass(frozen=True)
class Decomposition:
    orbit: OrbitChoice | None
    target: QSpace | None
    summands: tuple[ReprDatum, ...]
    reason: str
    discrepancies: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "orbit": None if self.orbit is None else
            {"ell": self.orbit.ell, "disc_O": self.orbit.disc_O.name},
            "target": None if self.target is None else self.target.as_dict(),
            "summands": [s.as_dict() for s in self.summands],
            "reason": self.reason,
            "discrepancies": list(self.discrepancies),
        }


def spectral_decomposition(pi: ReprDatum, disc_O: SquareClass, universe: Universe
                           ) -> Decomposition:
    occ = first_occurrence_rep(pi, universe)
    if occ.ell0 is None:
        return Decomposition(None, None, (), "E_UNIVERSE_EXHAUSTED")
    orbit = OrbitChoice(occ.orbit_ell, disc_O)
    try:
        W = descent_space(pi.space, orbit)
    except OrbitInfeasibleError:
        return Decomposition(orbit, None, (), "E_ORBIT_INFEASIBLE")
    if pi.is_even:
        chi = renormalize(pi, disc_O)
        res = first_occurrence_param(pi.param, chi, universe)
        if res.ell0 is None or res.ell0 < occ.ell0:
            return Decomposition(orbit, W, (), "ZERO_AT_ORBIT")
        keep = [c.param for c in res.classes]
        out, bad = [], []
        for phi_d in keep:
            sigma = make_repr(phi_d, chi_star_fast(pi.param, phi_d, universe)[1], disc=W.disc)
            if sigma.space != W:
                bad.append(f"{phi_d}: {sigma.space} != {W}")
            out.append(sigma)
    else:
        res = first_occurrence_param(pi.param, pi.char, universe)
        a = -disc_O
        out, bad = [], []
        for cls in res.classes:
            phi_d = cls.param
            if phi_d.det_class != disc_O * pi.space.disc:
                continue
            sigma = make_repr(phi_d, chi_star_fast(pi.param, phi_d, universe)[1], a=a)
            if sigma.space != W:
                bad.append(f"{phi_d}: {sigma.space} != {W}")
            out.append(sigma)
    reason = "OK" if out else "ZERO_AT_ORBIT"
    return Decomposition(orbit, W, tuple(out), reason, tuple(bad))


def spectral_all_orbits(pi: ReprDatum, universe: Universe) -> list[Decomposition]:
    return [spectral_decomposition(pi, d, universe) for d in pi.space.field]


def multiplicity(pi: ReprDatum, sigma: ReprDatum, universe: Universe) -> int:
    """m(pi, sigma) for a relevant pair, from the distinguished characters."""
    if pi.space.field is not sigma.space.field:
        raise ParameterError("data from different field models")
    if (pi.space.dim - sigma.space.dim) % 2 == 0:
        raise RelevanceError("the two spaces must differ by an odd dimension")
    even, odd = (pi, sigma) if pi.is_even else (sigma, pi)
    V, W = even.space, odd.space
    phi, vphi = discrete_part(even.param), discrete_part(odd.param)
    a = -(W.disc * V.disc)
    star_e, star_o = chi_star_fast(phi, vphi, universe)
    chi_e = CompCharacter(phi.good_parity(), renormalize(even, a).signs, "S",
                          star_e.parity).normalized()
    chi_o = CompCharacter(vphi.good_parity(), odd.char.signs, "S", star_o.parity).normalized()
    if not (chi_e.same_on_S(star_e) and chi_o.same_on_S(star_o)):
        return 0
    E = E_pair(phi, vphi, universe)
    n, m = V.dim // 2, W.dim // 2
    f = V.field
    minus = f.minus_one
    if V.disc != even.param.det_class:
        return 0
    if W.hasse != split_odd_hasse(m, W.disc) * E:
        return 0
    sign = hilbert_symbol(minus, minus) if (n * (n + 1) // 2) % 2 else 1
    if V.hasse != sign * hilbert_symbol((minus if n % 2 else f.one) * W.disc, V.disc) * E:
        return 0
    return 1


def wavefront_p1(pi: ReprDatum, universe: Universe, conjectural: bool = False) -> dict:
    if not conjectural:
        raise PreconditionError("the wave-front head is conjectural; pass conjectural=True")
    from .fixtures import known_partition

    occ = first_occurrence_rep(pi, universe)
    if occ.orbit_ell is None:
        return {"p1": None, "mode": "conjectural", "partition": None,
                "exhausted_universe": True}
    p1 = 2 * occ.orbit_ell + 1
    return {"p1": p1, "mode": "conjectural",
            "partition": known_partition(pi.space.dim, p1),
            "exhausted_universe": occ.exhausted_universe}


__all__ = [
    "Decomposition", "DescentResult", "RepOccurrence", "ReprDatum", "first_occurrence_rep",
    "make_repr", "multiplicity", "renormalize", "spectral_all_orbits",
    "spectral_decomposition", "wavefront_p1",
]
