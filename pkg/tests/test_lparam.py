import pytest
from hypothesis import given
from hypothesis import strategies as st

from lpdescent.errors import OracleMissingError, ParameterError, UniverseError
from lpdescent.field_model import hilbert_symbol
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
    component_group,
    discrete_part,
    eta_twist,
    z_orbit,
)

from _support import FIELDS, character_of, discrete_param, mixed_universe

U = mixed_universe(5, 1, -1)
F = U.field


def blk(label, b):
    return SimpleParam(U[label], b)


def test_block_types_and_dims():
    assert blk("chi_1", 2).block_type is SDType.SYMPLECTIC
    assert blk("chi_u", 3).block_type is SDType.ORTHOGONAL
    assert blk("sigma", 1).block_type is SDType.SYMPLECTIC
    assert blk("sigma", 2).block_type is SDType.ORTHOGONAL
    assert blk("omega", 2).dim == 6
    assert blk("omega", 3).det == F.cls("u")
    assert blk("omega", 2).det.is_trivial


def test_build_merges_and_sorts():
    phi = LParameter.build([blk("chi_u", 2), blk("chi_1", 2), (blk("chi_u", 2), 2)])
    assert phi.kind is SDType.SYMPLECTIC
    assert phi.as_list() == [["chi_1", 2, 1], ["chi_u", 2, 3]]
    assert phi.dim == 8
    assert not phi.is_discrete
    assert discrete_part(phi).as_list() == [["chi_1", 2, 1], ["chi_u", 2, 1]]


def test_wrong_type_needs_even_multiplicity():
    with pytest.raises(ParameterError):
        LParameter.build([blk("chi_1", 2), blk("chi_1", 1)], SDType.SYMPLECTIC)
    phi = LParameter.build([blk("chi_1", 2), (blk("chi_1", 1), 2)], SDType.SYMPLECTIC)
    assert phi.bad_parity() == (blk("chi_1", 1),)
    assert discrete_part(phi).dim == 2


def test_type_inference_needs_a_decision():
    with pytest.raises(ParameterError):
        LParameter.build([blk("chi_1", 2), blk("chi_u", 1)])
    with pytest.raises(ParameterError):
        LParameter.build([], SDType.ORTHOGONAL)


def test_component_group_index():
    sym = LParameter.build([blk("chi_1", 2), blk("chi_u", 4), blk("sigma", 1)])
    assert component_group(sym).order == 8
    orth = LParameter.build([blk("chi_1", 1), blk("chi_u", 3), blk("sigma", 2)])
    G = component_group(orth)
    assert G.order_A == 8 and G.order == 4
    even = LParameter.build([blk("sigma", 2), blk("sigma", 4)])
    assert component_group(even).parity is None


@given(discrete_param(U))
def test_character_counts_match_group_order(phi):
    G = component_group(phi)
    assert len(all_characters(phi, "S")) == G.order
    assert len(all_characters(phi, "A")) == G.order_A


@given(st.data())
def test_characters_agree_on_S_after_normalizing(data):
    phi = data.draw(discrete_param(U, SDType.ORTHOGONAL))
    a = data.draw(character_of(phi, "A"))
    b = data.draw(character_of(phi, "A"))
    G = component_group(phi)
    same = all(a(e) == b(e) for e in G.elements("S"))
    assert a.same_on_S(b) == same


@given(st.data())
def test_z_orbit_is_an_orbit(data):
    phi = data.draw(discrete_param(U, SDType.ORTHOGONAL))
    chi = data.draw(character_of(phi))
    orbit = z_orbit(phi, chi)
    assert chi.restrict() in orbit
    assert len(orbit) <= len(F)
    for other in orbit:
        assert set(map(lambda c: c.signs, z_orbit(phi, other))) == {c.signs for c in orbit}


def test_eta_twist_values():
    phi = LParameter.build([blk("chi_1", 1), blk("chi_u", 1), blk("chi_pi", 1),
                            blk("chi_u*pi", 1)])
    pi = F.cls("pi")
    eta = eta_twist(phi, pi)
    assert eta.signs == tuple(hilbert_symbol(g.det, pi) for g in phi.good_parity())
    assert eta.signs == (1, 1, -1, -1)  # chi_1, chi_pi, chi_u, chi_u*pi


def test_c_class():
    assert c_class(LParameter.build([blk("sigma", 2), blk("sigma", 4)])).splits
    assert not c_class(LParameter.build([blk("chi_1", 1), blk("chi_u", 1)])).splits
    assert not c_class(LParameter.build([blk("chi_1", 2)])).splits


def test_character_validation():
    phi = LParameter.build([blk("chi_1", 2), blk("chi_u", 2)])
    with pytest.raises(ParameterError):
        CompCharacter.make(phi, [1])
    with pytest.raises(ParameterError):
        CompCharacter.make(phi, [1, 2])
    with pytest.raises(ParameterError):
        CompCharacter.make(phi, {blk("chi_pi", 2): -1})
    chi = CompCharacter.make(phi, {blk("chi_u", 2): -1}, "S")
    assert chi.signs == (1, -1)
    assert chi.value_at_one() == -1


def test_off_S_evaluation_is_an_error():
    phi = LParameter.build([blk("chi_1", 1), blk("chi_u", 1)])
    chi = CompCharacter.trivial(phi)
    with pytest.raises(ParameterError):
        chi((1, 0))


def test_universe_validation():
    f = FIELDS[5]
    sig = IrrWeilRep("s", 2, SDType.SYMPLECTIC, f.one)
    om = IrrWeilRep("o", 1, SDType.ORTHOGONAL, f.one)
    with pytest.raises(OracleMissingError):
        Universe(f, [sig, om], EpsilonOracle())
    with pytest.raises(UniverseError):
        Universe(f, [om, om], EpsilonOracle())
    with pytest.raises(UniverseError):
        EpsilonOracle({("s", "o"): 1, ("o", "s"): -1})
    with pytest.raises(UniverseError):
        IrrWeilRep("bad", 1, SDType.SYMPLECTIC, f.one)
    with pytest.raises(UniverseError):
        IrrWeilRep("bad", 2, SDType.SYMPLECTIC, f.cls("u"))
    with pytest.raises(UniverseError):
        U["missing"]
