import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lpdescent.descent import (
    brute_force_descent,
    descent_set,
    enumerate_psi,
    families,
    first_occurrence_param,
    phi_sgn,
    sgn_sets,
)
from lpdescent.errors import BudgetExceededError, PreconditionError
from lpdescent.fixtures import random_cuspidal, random_mixed_universe, so5_unipotent
from lpdescent.lparam import (
    CompCharacter,
    EpsilonOracle,
    IrrWeilRep,
    LParameter,
    SDType,
    SimpleParam,
    Universe,
    all_characters,
    c_class,
    char_rep,
)
from lpdescent.rootnum import chi_star_fast

from _support import FIELDS, character_of, discrete_param, discrete_params, mixed_universe


def agree(phi, chi, U, max_dim=None):
    a = first_occurrence_param(phi, chi, U)
    b = brute_force_descent(phi, chi, U, max_dim)
    return (a.ell0, a.params()) == (b.ell0, b.params())


def test_so5_unipotent_example():
    U, phi, chi = so5_unipotent()
    r = first_occurrence_param(phi, chi, U)
    assert r.ell0 == 1
    assert [p.as_list() for p in r.params()] == [[["chi_1", 1, 1], ["chi_u", 1, 1]]]
    assert agree(phi, chi, U)
    # the trivial character: conventional top index, empty complement
    t = first_occurrence_param(phi, CompCharacter.trivial(phi), U)
    assert t.ell0 == 2 and t.conventional and t.params()[0].is_zero


@pytest.mark.parametrize("s1,s2", list(product((1, -1), repeat=2)))
def test_oracle_equivalence_small(s1, s2):
    U = mixed_universe(5, s1, s2)
    for kind in (SDType.SYMPLECTIC, SDType.ORTHOGONAL):
        for phi in discrete_params(U, kind, 8):
            for chi in all_characters(phi, "S"):
                assert agree(phi, chi, U), (str(phi), str(chi))


def test_oracle_equivalence_dyadic_with_a_four_dimensional_rep():
    f = FIELDS[2]
    rng = random.Random(1)
    sig = IrrWeilRep("sigma", 4, SDType.SYMPLECTIC, f.one)
    om = IrrWeilRep("omega", 2, SDType.ORTHOGONAL, f.cls("5"))
    chars = [char_rep(c, "chi_" + c.name) for c in f][:5]
    U = Universe(f, [*chars, sig, om],
                 EpsilonOracle({("sigma", r.label): rng.choice((1, -1)) for r in [*chars, om]}))
    n = 0
    for kind in (SDType.SYMPLECTIC, SDType.ORTHOGONAL):
        for phi in discrete_params(U, kind, 8):
            for chi in all_characters(phi, "S"):
                assert agree(phi, chi, U), (str(phi), str(chi))
                n += 1
    assert n > 1000


@given(st.data())
def test_every_descent_member_has_the_right_character(data):
    U = mixed_universe(5, data.draw(st.sampled_from([1, -1])), data.draw(st.sampled_from([1, -1])))
    phi = data.draw(discrete_param(U, max_dim=10))
    chi = data.draw(character_of(phi))
    r = first_occurrence_param(phi, chi, U)
    if r.ell0 is None:
        return
    sg = phi_sgn(phi, chi)
    for c in r.classes:
        vphi = c.param
        assert vphi.kind is phi.kind.flipped()
        assert vphi.dim == phi.dim - 2 * r.ell0
        assert vphi.is_discrete and vphi.contains(sg)
        assert chi_star_fast(phi, vphi, U)[0].same_on_S(chi)
        assert c.c_splits == c_class(vphi).splits


def test_corrected_condition_against_the_literal_one():
    # with the odd blocks of phi_sgn left out of the partner, the closed form
    # proposes complements whose character is wrong
    U = mixed_universe(5, 1, -1)
    phi = LParameter.build([SimpleParam(U["chi_u"], 2), SimpleParam(U["sigma"], 1)],
                           SDType.SYMPLECTIC)
    chi = CompCharacter.make(phi, [-1, -1], "S")
    sg = phi_sgn(phi, chi)
    fixed = enumerate_psi(phi, chi, U)
    literal = enumerate_psi(phi, chi, U, literal=True)
    assert fixed != literal
    for psi in fixed:
        assert chi_star_fast(phi, psi + sg, U)[0].same_on_S(chi)
    assert not all(chi_star_fast(phi, psi + sg, U)[0].same_on_S(chi) for psi in literal)
    r = first_occurrence_param(phi, chi, U)
    assert r.ell0 == 1 and len(r.classes) == 3
    assert agree(phi, chi, U)


def test_cuspidal_shapes():
    rng = random.Random(5)
    n = 0
    while n < 60:
        U = random_mixed_universe(rng)
        c = random_cuspidal(rng, U)
        if c is None:
            continue
        n += 1
        r = first_occurrence_param(c.param, c.char, U)
        assert r.ell0 == c.expected_ell0
        assert r.params() == [c.expected_sgn] == [phi_sgn(c.param, c.char)]


def test_sign_sets_and_phi_sgn_shape():
    U = mixed_universe(5, 1, 1)
    blk = lambda lab, b: SimpleParam(U[lab], b)  # noqa: E731
    phi = LParameter.build([blk("chi_1", 2), blk("chi_1", 4), blk("chi_1", 6)], SDType.SYMPLECTIC)
    fam = families(phi)
    assert fam.even == {"chi_1": [1, 2, 3]}
    chi = CompCharacter.make(phi, [1, -1, 1], "S")
    sgn = sgn_sets(phi, chi)
    assert sgn.even == {}
    sg = phi_sgn(phi, chi)
    assert sg.kind is SDType.ORTHOGONAL
    assert all(b.rho.label == "chi_1" and b.b % 2 for b in sg.block_list())
    assert phi_sgn(phi, CompCharacter.trivial(phi)).is_zero


@given(st.data())
def test_phi_sgn_properties(data):
    U = mixed_universe(2, 1, -1)
    phi = data.draw(discrete_param(U, max_dim=12))
    chi = data.draw(character_of(phi))
    sg = phi_sgn(phi, chi)
    assert sg.dim <= phi.dim
    assert sg.is_zero or (sg.kind is phi.kind.flipped() and sg.is_discrete)
    if chi.is_trivial():
        assert sg.is_zero


def test_exhausted_universe():
    f = FIELDS[5]
    U = Universe(f, [char_rep(f.one, "chi_1")], EpsilonOracle())
    phi = LParameter.build([SimpleParam(U["chi_1"], 2)], SDType.SYMPLECTIC)
    chi = CompCharacter.make(phi, [-1], "S")
    r = first_occurrence_param(phi, chi, U)
    assert r.ell0 is None and r.exhausted_universe and not r.classes
    b = brute_force_descent(phi, chi, U)
    assert b.ell0 is None
    # adding the missing character resolves it
    U2 = Universe(f, [char_rep(f.one, "chi_1"), char_rep(f.cls("u"), "chi_u")], EpsilonOracle())
    phi2 = LParameter.build([SimpleParam(U2["chi_1"], 2)], SDType.SYMPLECTIC)
    assert first_occurrence_param(phi2, CompCharacter.make(phi2, [-1], "S"), U2).ell0 == 0


def padded_universe():
    f = FIELDS[5]
    tau = IrrWeilRep("tau", 1, SDType.NOT_SELF_DUAL, f.one)
    return Universe.with_characters(f, [tau])


def test_descent_below_first_occurrence_pads_with_non_self_dual_pairs():
    U = padded_universe()
    phi = LParameter.build([SimpleParam(U["chi_1"], 2), SimpleParam(U["chi_u"], 2)],
                           SDType.SYMPLECTIC)
    chi = CompCharacter.make(phi, [-1, -1], "S")
    base = first_occurrence_param(phi, chi, U)
    assert base.ell0 == 1
    assert descent_set(phi, chi, 2, U).classes == ()
    assert descent_set(phi, chi, 1, U) == base
    low = descent_set(phi, chi, 0, U)
    assert len(low.classes) == 1
    vphi = low.classes[0].param
    assert vphi.dim == 4 and not vphi.is_discrete
    assert vphi.multiplicity(SimpleParam(U["tau"], 1)) == 1
    assert chi_star_fast(phi, vphi, U)[0].same_on_S(chi)


def test_descent_below_first_occurrence_without_padding_material():
    U, phi, chi = so5_unipotent()
    r = descent_set(phi, chi, 0, U)
    assert r.classes == () and r.exhausted_universe
    with pytest.raises(PreconditionError):
        descent_set(phi, chi, 3, U)
    with pytest.raises(PreconditionError):
        descent_set(phi, chi, -1, U)


def test_odd_dimension_is_rejected():
    U = mixed_universe(5, 1, 1)
    phi = LParameter.build([SimpleParam(U["chi_1"], 3)], SDType.ORTHOGONAL)
    with pytest.raises(PreconditionError):
        first_occurrence_param(phi, CompCharacter.trivial(phi), U)


def test_brute_force_budget():
    U = mixed_universe(5, 1, 1)
    phi = LParameter.build([SimpleParam(U["chi_1"], 2), SimpleParam(U["chi_u"], 4),
                            SimpleParam(U["sigma"], 1)], SDType.SYMPLECTIC)
    with pytest.raises(BudgetExceededError):
        brute_force_descent(phi, CompCharacter.trivial(phi), U, budget=10)
