"""Builder tests.  Normal forms are cross-checked against a naive string
rewriting engine that knows nothing about the closed-form structure
constants used by the builders."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from taftsmash.cyclofield import CyclotomicField, ambient_order
from taftsmash.errors import InvalidInput
from taftsmash.hopf import verify_hopf, group_likes, structure_equal, \
    finhopf_to_json, finhopf_from_json
from taftsmash.builders import (TaftSpec, MetacyclicSpec, SmashSpec,
                                build_taft, build_group_algebra,
                                build_matched_pair, build_bicrossed,
                                build_smash_presentation,
                                build_smash_via_actions, trivial_right_action,
                                verify_matched_pair, MatchedPairData,
                                taft_index, group_index,
                                group_product_indices)


# -- naive rewriting oracles ------------------------------------------------

def _rewrite_group_word(word: str, l: int, n: int, k: int) -> tuple[int, int]:
    """Normal form d^t c^i of a word in {'c', 'd'}, by repeatedly applying
    cd -> d^k c until no 'c' precedes a 'd'."""
    while "cd" in word:
        word = word.replace("cd", "d" * k + "c", 1)
    t, i = word.count("d"), word.count("c")
    return t % n, i % l


def _rewrite_taft_word(i1, j1, i2, j2, m):
    """(h^i1 x^j1)(h^i2 x^j2) by moving every x past every h one swap at a
    time, each swap contributing one factor q."""
    swaps = j1 * i2
    if j1 + j2 >= m:
        return None
    return swaps, (i1 + i2) % m, j1 + j2


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(2, 3, 2), (2, 4, 3), (3, 7, 2), (4, 5, 1), (1, 6, 1)]),
       st.data())
def test_group_normal_form_matches_rewriting(shape, data):
    l, n, k = shape
    spec = MetacyclicSpec(l=l, n=n, k=k)
    t1, i1 = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, l - 1))
    t2, i2 = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, l - 1))
    word = "d" * t1 + "c" * i1 + "d" * t2 + "c" * i2
    assert group_product_indices(spec, t1, i1, t2, i2) == \
        _rewrite_group_word(word, l, n, k)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.data())
def test_taft_product_matches_rewriting(m, data):
    alg = build_taft(TaftSpec(m=m))
    f = alg.field
    q_exp = TaftSpec(m=m).resolved_q_exp(f)
    i1, j1, i2, j2 = (data.draw(st.integers(0, m - 1)) for _ in range(4))
    got = alg.basis_product(taft_index(i1, j1, m), taft_index(i2, j2, m))
    expected = _rewrite_taft_word(i1, j1, i2, j2, m)
    if expected is None:
        assert got == {}
    else:
        swaps, i, j = expected
        assert got == {taft_index(i, j, m): f.zeta(q_exp * swaps)}


# -- Taft builder -----------------------------------------------------------

@pytest.mark.parametrize("m", [2, 3, 4])
def test_taft_passes_axioms(m):
    alg = build_taft(TaftSpec(m=m))
    assert alg.dim == m * m
    assert verify_hopf(alg).all_pass


def test_taft_defining_relations():
    m = 3
    alg = build_taft(TaftSpec(m=m))
    f = alg.field
    h, x = taft_index(1, 0, m), taft_index(0, 1, m)
    # h^m = 1 and x^m = 0
    assert alg.basis_product(taft_index(m - 1, 0, m), h) == \
        {taft_index(0, 0, m): f.one}
    assert alg.basis_product(taft_index(0, m - 1, m), x) == {}
    # xh = q hx
    q = f.zeta(TaftSpec(m=m).resolved_q_exp(f))
    assert alg.basis_product(x, h) == {taft_index(1, 1, m): q}
    # S(x) = -x h^{m-1} = -q^{m-1} h^{m-1} x
    assert alg.antipode[x] == {taft_index(m - 1, 1, m): -(q ** (m - 1))}


def test_taft_rejects_wrong_q_order():
    field = CyclotomicField(12)
    with pytest.raises(InvalidInput):
        TaftSpec(m=3, q_exp=6).resolved_q_exp(field)  # zeta^6 has order 2
    with pytest.raises(InvalidInput):
        TaftSpec(m=1).validate()


def test_taft_accepts_any_primitive_root():
    field = CyclotomicField(12)
    # both primitive cube roots give valid, different Taft algebras
    a = build_taft(TaftSpec(m=3, q_exp=4), field)
    b = build_taft(TaftSpec(m=3, q_exp=8), field)
    assert verify_hopf(a).all_pass and verify_hopf(b).all_pass
    assert not structure_equal(a, b)


# -- group algebra builder --------------------------------------------------

@pytest.mark.parametrize("l,n,k", [(2, 3, 2), (2, 4, 3), (2, 3, 2),
                                   (3, 7, 2), (1, 5, 1)])
def test_group_algebra_passes_axioms(l, n, k):
    alg = build_group_algebra(MetacyclicSpec(l=l, n=n, k=k))
    assert alg.dim == l * n
    assert verify_hopf(alg).all_pass
    assert len(group_likes(alg)) == l * n


def test_metacyclic_spec_validation():
    with pytest.raises(InvalidInput):
        MetacyclicSpec(l=2, n=5, k=2).validate()  # 2^2 = 4 != 1 mod 5
    assert MetacyclicSpec(l=2, n=6, k=5).is_dihedral
    assert not MetacyclicSpec(l=3, n=7, k=2).is_dihedral


# -- matched pairs and the bicrossed product --------------------------------

def _smash_spec(m, l, n, k, beta_exp, sigma_exp, q_exp=None):
    return SmashSpec(taft=TaftSpec(m=m, q_exp=q_exp),
                     group=MetacyclicSpec(l=l, n=n, k=k),
                     beta_exp=beta_exp, sigma_exp=sigma_exp)


def test_smash_spec_validates_parameter_orders():
    field = CyclotomicField(6)
    spec = _smash_spec(2, 2, 3, 2, beta_exp=2, sigma_exp=0)  # beta^2 != 1
    with pytest.raises(InvalidInput):
        spec.validate(field)


def test_smash_spec_json_round_trip():
    spec = _smash_spec(3, 2, 4, 3, beta_exp=6, sigma_exp=0, q_exp=4)
    assert SmashSpec.from_json(spec.to_json()) == spec
    assert spec.to_json() == {"m": 3, "q_exp": 4, "l": 2, "n": 4, "k": 3,
                              "beta_exp": 6, "sigma_exp": 0}


def test_matched_pair_verifies():
    spec = _smash_spec(2, 2, 3, 2, beta_exp=3, sigma_exp=0)
    field = CyclotomicField(spec.ambient())
    mp = build_matched_pair(spec, field, verify=True)
    taft = build_taft(spec.taft, field)
    grp = build_group_algebra(spec.group, field)
    ok, reason = verify_matched_pair(taft, grp, mp)
    assert ok, reason
    assert mp.right == trivial_right_action(taft, grp)


def test_tampered_action_table_detected():
    spec = _smash_spec(2, 2, 3, 2, beta_exp=3, sigma_exp=0)
    field = CyclotomicField(spec.ambient())
    mp = build_matched_pair(spec, field, verify=True)
    taft = build_taft(spec.taft, field)
    grp = build_group_algebra(spec.group, field)
    x = taft_index(0, 1, spec.taft.m)
    c = group_index(0, 1, spec.group)
    bad_left = dict(mp.left)
    bad_left[(c, x)] = {x: field.zeta(1)}  # wrong eigenvalue for c |> x
    ok, reason = verify_matched_pair(taft, grp,
                                     MatchedPairData(bad_left, mp.right))
    assert not ok and reason


def test_bicrossed_product_passes_axioms():
    spec = _smash_spec(2, 2, 4, 3, beta_exp=2, sigma_exp=2)
    field = CyclotomicField(spec.ambient())
    mp = build_matched_pair(spec, field)
    alg = build_bicrossed(build_taft(spec.taft, field),
                          build_group_algebra(spec.group, field), mp)
    assert alg.dim == spec.taft.m ** 2 * spec.group.l * spec.group.n
    assert verify_hopf(alg).all_pass


@pytest.mark.parametrize("beta_exp,sigma_exp",
                         [(0, 0), (3, 0)])
def test_presentation_equals_bicrossed_route(beta_exp, sigma_exp):
    spec = _smash_spec(2, 2, 3, 2, beta_exp, sigma_exp)
    field = CyclotomicField(spec.ambient())
    a = build_smash_presentation(spec, field)
    b = build_smash_via_actions(spec, field)
    assert structure_equal(a, b)
    assert verify_hopf(a).all_pass


def test_smash_group_likes_count():
    # group-likes of T_9 # K[D_6] are h^i (x) g: 3 * 6 = 18 of them
    spec = _smash_spec(3, 2, 3, 2, beta_exp=0, sigma_exp=0)
    field = CyclotomicField(spec.ambient())
    alg = build_smash_presentation(spec, field)
    assert len(group_likes(alg)) == 18


def test_smash_json_round_trip():
    spec = _smash_spec(2, 2, 3, 2, beta_exp=3, sigma_exp=0)
    field = CyclotomicField(spec.ambient())
    alg = build_smash_presentation(spec, field)
    data = finhopf_to_json(alg)
    assert finhopf_to_json(finhopf_from_json(data)) == data
