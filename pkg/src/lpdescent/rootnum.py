"""Signs of local root numbers at s = 1/2 for tensor products of Jordan blocks.

Two independent routes compute the pair chi-star(phi, vphi):

* ``chi_star_slow`` multiplies normalized block-pair signs obtained from the
  case tree in :func:`eps_block_pair`;
* ``chi_star_fast`` evaluates closed forms that only need the base signs of
  irreducible pairs and the multiplicity pattern of the blocks.

The normalized pairing of an orthogonal X and a symplectic Y is

    E(X, Y) = det(X)(-1)^(dim Y / 2) * eps(X (x) Y),

which is multiplicative in both arguments.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .errors import PreconditionError, PsiDependentError, TypeMismatchError
from .field_model import Sign, SquareClass, hilbert_symbol, quad_char_values
from .lparam import (
    CompCharacter,
    IrrWeilRep,
    LParameter,
    SDType,
    SimpleParam,
    Universe,
    discrete_part,
)


def _at_minus_one(c: SquareClass) -> Sign:
    return hilbert_symbol(c.field.minus_one, c)


def _pow(s: Sign, k: int) -> Sign:
    return s if k % 2 else 1


@dataclass(frozen=True)
class BlockPairQuery:
    left: SimpleParam
    right: SimpleParam

    def __post_init__(self) -> None:
        if not (self.left.rho.self_dual and self.right.rho.self_dual):
            raise PreconditionError("root-number queries need self-dual blocks")

    @property
    def tensor_type(self) -> SDType:
        same = self.left.rho.sd_type is self.right.rho.sd_type
        return SDType.ORTHOGONAL if same else SDType.SYMPLECTIC


def base_epsilon(pi: IrrWeilRep, tau: IrrWeilRep, universe: Universe) -> Sign:
    """eps(pi x tau) for irreducible self-dual pi, tau."""
    if pi.sd_type is not tau.sd_type:
        return universe.oracle.get(pi.label, tau.label)
    # orthogonal tensor: depends on the additive character in general
    if pi.is_character and tau.is_character:
        prod = pi.det_class * tau.det_class
        if quad_char_values(prod).is_unramified:
            return 1
    raise PsiDependentError(
        f"eps({pi.label} x {tau.label}) depends on the additive character"
    )


def eps_block_pair(q: BlockPairQuery | SimpleParam, right: SimpleParam | None = None,
                   universe: Universe | None = None) -> Sign:
    """Sign of eps(rho_pi x mu_n (x) rho_tau x mu_m) via the case tree."""
    if not isinstance(q, BlockPairQuery):
        assert right is not None
        q = BlockPairQuery(q, right)
    x, y = q.left, q.right
    n, m = x.b, y.b
    if n % 2 == 0 and m % 2 == 0:
        return 1
    if q.tensor_type is SDType.SYMPLECTIC:
        if (m + n) % 2:
            return 1
        if universe is None:
            raise PreconditionError("the symplectic mn-odd branch needs a universe")
        return base_epsilon(x.rho, y.rho, universe)
    if (m + n) % 2:
        if x.rho == y.rho:
            return -1 if min(m, n) % 2 else 1
        a, b = x.rho.dim, y.rho.dim
        return _pow(_at_minus_one(x.rho.det_class), b * m * n // 2) * _pow(
            _at_minus_one(y.rho.det_class), a * m * n // 2
        )
    if universe is None:
        if x.rho.is_character and y.rho.is_character:
            prod = x.rho.det_class * y.rho.det_class
            if quad_char_values(prod).is_unramified:
                return 1
        raise PsiDependentError("orthogonal mn-odd branch depends on the additive character")
    return base_epsilon(x.rho, y.rho, universe)


def eps_char_blocks(chi: SquareClass, n: int, xi: SquareClass, m: int) -> Sign:
    """eps((chi x mu_n) (x) (xi x mu_m)) for quadratic characters, m + n odd."""
    if (m + n) % 2 == 0:
        raise PreconditionError("closed form needs m + n odd")
    q = quad_char_values(chi * xi)
    if q.is_unramified:
        return _pow(-q.at_uniformizer, min(m, n))
    return _pow(q.at_minus_one, m * n // 2)


def eps_sd_block(tau: SquareClass, r: int) -> Sign:
    """eps(tau x mu_r) for a quadratic character tau with det(tau x mu_r) = 1."""
    if r < 1:
        raise PreconditionError("r must be positive")
    if r % 2:
        if not tau.is_trivial:
            raise PreconditionError("det(tau x mu_r) = tau for odd r; must be trivial")
        return 1
    q = quad_char_values(tau)
    if q.is_unramified:
        return -q.at_uniformizer
    return _pow(q.at_minus_one, r // 2)


def clebsch_gordan(n: int, m: int) -> list[int]:
    """mu_n (x) mu_m = sum of mu_r over the returned list."""
    return [n + m + 1 - 2 * i for i in range(1, min(n, m) + 1)]


def eps_char_blocks_cg(chi: SquareClass, n: int, xi: SquareClass, m: int) -> Sign:
    s = 1
    for r in clebsch_gordan(n, m):
        s *= eps_sd_block(chi * xi, r)
    return s


# -- normalized pairing -------------------------------------------------

def E_block(x: SimpleParam, y: SimpleParam, universe: Universe) -> Sign:
    """Normalized sign E(X, Y) for blocks of opposite type."""
    tx, ty = x.block_type, y.block_type
    if {tx, ty} != {SDType.ORTHOGONAL, SDType.SYMPLECTIC}:
        raise TypeMismatchError(f"blocks {x} and {y} are not of opposite type")
    orth, symp = (x, y) if tx is SDType.ORTHOGONAL else (y, x)
    return _pow(_at_minus_one(orth.det), symp.dim // 2) * eps_block_pair(x, y, universe)


def _check_pair(phi: LParameter, vphi: LParameter) -> None:
    if phi.kind is vphi.kind:
        raise TypeMismatchError("parameters must be of different type")


def E_pair(phi: LParameter, vphi: LParameter, universe: Universe) -> Sign:
    _check_pair(phi, vphi)
    s = 1
    for x in discrete_part(phi).block_list():
        for y in discrete_part(vphi).block_list():
            s *= E_block(x, y, universe)
    return s


def chi_star_slow(phi: LParameter, vphi: LParameter, universe: Universe
                  ) -> tuple[CompCharacter, CompCharacter]:
    _check_pair(phi, vphi)
    gp, gv = phi.good_parity(), vphi.good_parity()
    table = {(x, y): E_block(x, y, universe) for x in gp for y in gv}
    sp = []
    for x in gp:
        s = 1
        for y in gv:
            s *= table[x, y]
        sp.append(s)
    sv = []
    for y in gv:
        s = 1
        for x in gp:
            s *= table[x, y]
        sv.append(s)
    return CompCharacter.make(phi, sp, "A"), CompCharacter.make(vphi, sv, "A")


# -- closed forms ---------------------------------------------------------

def E_irreducible(r1: IrrWeilRep, r2: IrrWeilRep, universe: Universe) -> Sign:
    """E(r1, r2) for irreducible representations of opposite type."""
    if {r1.sd_type, r2.sd_type} != {SDType.ORTHOGONAL, SDType.SYMPLECTIC}:
        raise TypeMismatchError(f"{r1.label} and {r2.label} are not of opposite type")
    orth, symp = (r1, r2) if r1.sd_type is SDType.ORTHOGONAL else (r2, r1)
    return _pow(_at_minus_one(orth.det_class), symp.dim // 2) * universe.oracle.get(
        r1.label, r2.label
    )


def _one_side(phi: LParameter, vphi: LParameter, universe: Universe) -> list[Sign]:
    even_b: dict[str, list[int]] = defaultdict(list)  # rho -> alphas (even blocks of vphi)
    odd_b: dict[str, list[int]] = defaultdict(list)  # rho -> betas (odd blocks of vphi)
    reps: dict[str, IrrWeilRep] = {}
    for y in vphi.good_parity():
        reps[y.rho.label] = y.rho
        if y.b % 2:
            odd_b[y.rho.label].append((y.b - 1) // 2)
        else:
            even_b[y.rho.label].append(y.b // 2)
    dim_v = vphi.dim
    alpha_total = {lab: sum(al) for lab, al in even_b.items()}
    out = []
    for x in phi.good_parity():
        rho = x.rho
        if x.b % 2 == 0:
            alpha = x.b // 2
            s = _pow(_at_minus_one(rho.det_class), alpha * dim_v)
            s *= _pow(-1, sum(1 for beta in odd_b.get(rho.label, ()) if beta < alpha))
        else:
            beta = (x.b - 1) // 2
            s = 1
            for lab, betas in odd_b.items():
                s *= _pow(E_irreducible(rho, reps[lab], universe), len(betas))
            s *= _pow(-1, sum(1 for al in even_b.get(rho.label, ()) if al > beta))
            # correction off S: trivial on S_phi
            for lab, tot in alpha_total.items():
                s *= _pow(_at_minus_one(reps[lab].det_class), rho.dim * tot)
        out.append(s)
    return out


def chi_star_fast(phi: LParameter, vphi: LParameter, universe: Universe
                  ) -> tuple[CompCharacter, CompCharacter]:
    _check_pair(phi, vphi)
    p0, v0 = discrete_part(phi), discrete_part(vphi)
    return (
        CompCharacter.make(phi, _one_side(p0, v0, universe), "A"),
        CompCharacter.make(vphi, _one_side(v0, p0, universe), "A"),
    )


def chi_star(phi: LParameter, vphi: LParameter, universe: Universe, path: str = "fast"
             ) -> tuple[CompCharacter, CompCharacter]:
    if path == "slow":
        return chi_star_slow(phi, vphi, universe)
    if path == "fast":
        return chi_star_fast(phi, vphi, universe)
    raise PreconditionError(f"unknown path {path!r}")
