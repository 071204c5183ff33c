"""Hopf-core tests: axiom verification, group-likes, skew-primitives,
morphism checking and serialization on concrete small algebras."""

import copy

import pytest

from taftsmash.cyclofield import CyclotomicField, ambient_order
from taftsmash.errors import InvalidInput, MalformedInput
from taftsmash.hopf import (FinHopf, HopfElement, verify_hopf, group_likes,
                            is_group_like, skew_primitives, is_hopf_morphism,
                            is_isomorphism, compose_morphisms,
                            identity_morphism, finhopf_to_json,
                            finhopf_from_json, structure_equal)
from taftsmash.builders import TaftSpec, MetacyclicSpec, build_taft, \
    build_group_algebra, taft_index


@pytest.fixture(scope="module")
def taft3():
    return build_taft(TaftSpec(m=3))


@pytest.fixture(scope="module")
def taft2():
    return build_taft(TaftSpec(m=2))


# -- axiom suites -----------------------------------------------------------

def test_taft_passes_all_suites(taft3):
    rep = verify_hopf(taft3)
    assert rep.all_pass, rep.failures
    assert rep.passed_count == 6


def test_group_algebra_passes_all_suites():
    rep = verify_hopf(build_group_algebra(MetacyclicSpec(l=2, n=4, k=3)))
    assert rep.all_pass, rep.failures


def test_wrong_antipode_sign_detected(taft3):
    broken = FinHopf(taft3.field, taft3.labels, taft3.mul, taft3.unit,
                     taft3.comul, taft3.counit,
                     {i: {j: -c for j, c in row.items()}
                      for i, row in taft3.antipode.items()})
    rep = verify_hopf(broken)
    assert not rep.antipode
    assert not rep.all_pass


def test_dropped_q_twist_detected(taft3):
    # make x and h commute: the coproduct no longer respects multiplication
    x_idx, h_idx = taft_index(0, 1, 3), taft_index(1, 0, 3)
    mul = dict(taft3.mul)
    mul[(x_idx, h_idx)] = {taft_index(1, 1, 3): taft3.field.one}
    broken = FinHopf(taft3.field, taft3.labels, mul, taft3.unit,
                     taft3.comul, taft3.counit, taft3.antipode)
    rep = verify_hopf(broken)
    assert not rep.all_pass


def test_malformed_structure_rejected(taft3):
    with pytest.raises(MalformedInput):
        FinHopf(taft3.field, list(taft3.labels)[:-1], taft3.mul, taft3.unit,
                taft3.comul, taft3.counit, taft3.antipode)


# -- group-likes and skew-primitives ----------------------------------------

def test_taft_group_likes_are_h_powers(taft3):
    gs = group_likes(taft3)
    assert len(gs) == 3
    for g in gs:
        assert is_group_like(taft3, g)


def test_group_algebra_group_likes_count():
    alg = build_group_algebra(MetacyclicSpec(l=2, n=3, k=2))
    assert len(group_likes(alg)) == 6


@pytest.mark.parametrize("m", [2, 3, 4])
def test_skew_primitive_dimensions(m):
    """dim P_{h^j,1}: 2 for j = 1 (span{h - 1, x}), 1 for j not in {0, 1}
    (span{h^j - 1}), and 0 for j = 0 (no nonzero primitives in char 0)."""
    alg = build_taft(TaftSpec(m=m))
    one = HopfElement(alg, alg.basis_vec(taft_index(0, 0, m)))
    for j in range(m):
        g = HopfElement(alg, alg.basis_vec(taft_index(j, 0, m)))
        basis = skew_primitives(alg, g, one)
        expected = 2 if j == 1 else (0 if j == 0 else 1)
        assert len(basis) == expected


def test_skew_primitives_rejects_non_group_like(taft3):
    x = HopfElement(taft3, taft3.basis_vec(taft_index(0, 1, 3)))
    one = HopfElement(taft3, taft3.basis_vec(taft_index(0, 0, 3)))
    with pytest.raises(InvalidInput):
        skew_primitives(taft3, x, one)


# -- morphisms --------------------------------------------------------------

def test_identity_is_hopf_isomorphism(taft3):
    phi = identity_morphism(taft3)
    assert is_hopf_morphism(phi, taft3, taft3)
    assert is_isomorphism(phi, taft3, taft3)


def test_x_rescaling_is_automorphism(taft3):
    """h -> h, x -> zeta x extends to a Hopf automorphism of the Taft algebra."""
    f = taft3.field
    phi = {taft_index(i, j, 3): {taft_index(i, j, 3): f.zeta(j)}
           for i in range(3) for j in range(3)}
    assert is_isomorphism(phi, taft3, taft3)


def test_counit_projection_is_morphism_but_not_iso(taft2):
    """h -> 1, x -> 0 i.e. a -> eps(a) 1 is a Hopf morphism, not invertible."""
    f = taft2.field
    unit_idx = taft_index(0, 0, 2)
    phi = {i: ({unit_idx: eps} if (eps := taft2.counit.get(i)) else {})
           for i in range(taft2.dim)}
    assert is_hopf_morphism(phi, taft2, taft2)
    assert not is_isomorphism(phi, taft2, taft2)


def test_squaring_h_breaks_multiplication(taft2):
    """h -> h^2, x -> x: phi(xh) = q phi(h)phi(x) but phi(x)phi(h) = q^2 ..."""
    phi = {taft_index(i, j, 2): {taft_index(0, j, 2): taft2.field.one}
           for i in range(2) for j in range(2)}
    assert not is_hopf_morphism(phi, taft2, taft2)


def test_collapsing_h_breaks_comultiplication(taft3):
    """h -> 1, x -> x does not respect Delta(x) = x (x) h + 1 (x) x."""
    phi = {taft_index(i, j, 3): {taft_index(0, j, 3): taft3.field.one}
           for i in range(3) for j in range(3)}
    assert not is_hopf_morphism(phi, taft3, taft3)


def test_composition_of_morphisms_is_morphism(taft3):
    f = taft3.field
    phi = {taft_index(i, j, 3): {taft_index(i, j, 3): f.zeta(j)}
           for i in range(3) for j in range(3)}
    psi = compose_morphisms(phi, phi)
    assert is_hopf_morphism(psi, taft3, taft3)
    assert psi[taft_index(0, 1, 3)] == {taft_index(0, 1, 3): f.zeta(2)}


# -- serialization ----------------------------------------------------------

def test_json_round_trip_is_bit_exact(taft3):
    data = finhopf_to_json(taft3)
    back = finhopf_from_json(data)
    assert structure_equal(taft3, back)
    assert finhopf_to_json(back) == data


def test_json_field_mismatch_rejected(taft3):
    data = finhopf_to_json(taft3)
    with pytest.raises(MalformedInput):
        finhopf_from_json(data, field=CyclotomicField(4))


def test_json_missing_key_rejected(taft3):
    data = finhopf_to_json(taft3)
    del data["mul"]
    with pytest.raises((MalformedInput, KeyError)):
        finhopf_from_json(data)
