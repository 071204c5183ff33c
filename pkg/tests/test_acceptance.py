"""Acceptance gate: nine criteria, each printing exactly one pass/fail line.

All comparisons are exact (rational/cyclotomic arithmetic); there are no
numeric tolerances anywhere.  Runtime bounds are asserted where stated.
"""

import itertools
import math
import time

from taftsmash.cyclofield import CyclotomicField
from taftsmash.hopf import (verify_hopf, skew_primitives, HopfElement,
                            is_hopf_morphism, is_isomorphism,
                            compose_morphisms, identity_morphism,
                            finhopf_to_json, finhopf_from_json,
                            structure_equal)
from taftsmash.builders import (TaftSpec, MetacyclicSpec, SmashSpec,
                                build_taft, build_group_algebra,
                                build_smash_presentation,
                                build_smash_via_actions, taft_index)
from taftsmash.pairsearch import SearchContext, run_census
from taftsmash.classify import (classify, parameter_pairs, are_isomorphic,
                                build_witness_map, build_inverse_witness,
                                dihedral_smash_spec, oracle_isomorphic,
                                predicted_class_count)

TAFT_MS = (2, 3, 4)
GROUP_SHAPES = ((2, 3, 2), (2, 4, 3), (2, 3, 2))   # D_6, D_8, D^2_{2*3}
SMASH_TRIPLES = ((2, 2, 3, 2), (2, 2, 4, 3), (3, 2, 3, 2))
CLASSIFY_EXPECTED = {(3, 3): 2, (3, 5): 2, (3, 4): 3, (5, 4): 3,
                     (2, 3): 1, (2, 4): 1, (4, 3): 1, (4, 4): 1}


def report(capfd, criterion: int, passed: bool, detail: str) -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {criterion}: {detail}"
    with capfd.disabled():
        print(line, flush=True)
    assert passed, line


def _beta_sigma_grid(spec_group: MetacyclicSpec, m: int,
                     field: CyclotomicField):
    betas = [r.exponent for r in field.roots_of_unity(spec_group.l)]
    sigmas = [r.exponent for r in
              field.roots_of_unity(math.gcd(spec_group.n, spec_group.k - 1))]
    return list(itertools.product(sorted(betas), sorted(sigmas)))


def _smash_spec(m, l, n, k, beta_exp, sigma_exp):
    return SmashSpec(taft=TaftSpec(m=m), group=MetacyclicSpec(l=l, n=n, k=k),
                     beta_exp=beta_exp, sigma_exp=sigma_exp)


_built: dict[str, object] = {}


def _register(tag, alg):
    _built[tag] = alg
    return alg


def test_criterion_1_axiom_suites(capfd):
    start = time.perf_counter()
    ok, notes = True, []
    for m in TAFT_MS:
        alg = _register(f"taft m={m}", build_taft(TaftSpec(m=m)))
        rep = verify_hopf(alg)
        ok &= rep.all_pass
        notes += rep.failures
    for idx, (l, n, k) in enumerate(GROUP_SHAPES):
        alg = _register(f"group {l},{n},{k} #{idx}",
                        build_group_algebra(MetacyclicSpec(l=l, n=n, k=k)))
        rep = verify_hopf(alg)
        ok &= rep.all_pass
        notes += rep.failures
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5.0
    report(capfd, 1, ok, f"axiom suites for 3 Taft + 3 group algebras, all 6/6, "
                  f"{elapsed:.2f}s < 5s" + ("; " + "; ".join(notes) if notes
                                            else ""))


def test_criterion_2_skew_primitive_dimensions(capfd):
    ok = True
    for m in TAFT_MS:
        alg = build_taft(TaftSpec(m=m))
        one = HopfElement(alg, alg.basis_vec(taft_index(0, 0, m)))
        for j in range(m):
            g = HopfElement(alg, alg.basis_vec(taft_index(j, 0, m)))
            dim = len(skew_primitives(alg, g, one))
            expected = 2 if j == 1 else (0 if j == 0 else 1)
            ok &= dim == expected
    report(capfd, 2, ok, "dim P_{h^j,1} = 2 at j=1, 1 at j not in {0,1}, 0 at j=0, "
                  "for m in {2,3,4}")


def test_criterion_3_path_equality(capfd):
    ok = True
    mismatches = 0
    for m, l, n, k in SMASH_TRIPLES:
        group = MetacyclicSpec(l=l, n=n, k=k)
        field = CyclotomicField(math.lcm(2, m, l, n))
        for beta_exp, sigma_exp in _beta_sigma_grid(group, m, field):
            spec = _smash_spec(m, l, n, k, beta_exp, sigma_exp)
            a = _register(f"smash {m},{l},{n},{k},{beta_exp},{sigma_exp}",
                          build_smash_presentation(spec, field))
            b = build_smash_via_actions(spec, field)
            if not structure_equal(a, b):
                mismatches += 1
                ok = False
    report(capfd, 3, ok, f"presentation route == bicrossed route for all (beta, "
                  f"sigma) at three (m,l,n,k) shapes; {mismatches} mismatches")


def test_criterion_4_matched_pair_census(capfd):
    ok = True
    details = []
    for m, l, n, k in SMASH_TRIPLES:
        start = time.perf_counter()
        ctx = SearchContext(MetacyclicSpec(l=l, n=n, k=k), TaftSpec(m=m))
        res = run_census(ctx)  # raises if any survivor has nontrivial right action
        elapsed = time.perf_counter() - start
        good = res.count == res.expected_count == l * math.gcd(n, k - 1) \
            and elapsed < 60.0
        ok &= good
        details.append(f"({m},{l},{n},{k}): {res.count}/{res.expected_count} "
                       f"in {elapsed:.1f}s")
    report(capfd, 4, ok, "census survivors = l*gcd(n,k-1), trivial right action, "
                  "each < 60s: " + ", ".join(details))


def test_criterion_5_classification_counts(capfd):
    ok = True
    details = []
    for (m, n), expected in CLASSIFY_EXPECTED.items():
        res = classify(m, n)
        good = res.count == expected == predicted_class_count(m, n)
        ok &= good
        details.append(f"({m},{n}):{res.count}")
    report(capfd, 5, ok, "class counts exactly " +
                  ", ".join(f"{k}={v}" for k, v in CLASSIFY_EXPECTED.items()))


def test_criterion_6_witness_soundness(capfd):
    ok = True
    checked = 0
    for (m, n) in CLASSIFY_EXPECTED:
        field = CyclotomicField(math.lcm(2, m, n))
        res = classify(m, n, field=field)
        algs = {}

        def alg_of(p, m=m, n=n, field=field, algs=algs):
            if p not in algs:
                spec = dihedral_smash_spec(m, n, *p)
                algs[p] = _register(f"dihedral smash {m},{n},{p}",
                                    build_smash_presentation(spec, field))
            return algs[p]

        for cls in res.classes:
            for pa, pb in itertools.product(cls, repeat=2):
                sa = dihedral_smash_spec(m, n, *pa)
                sb = dihedral_smash_spec(m, n, *pb)
                w = are_isomorphic(sa, sb, field)
                if w is None:
                    ok = False
                    continue
                phi = build_witness_map(sa, sb, w, field)
                ok &= is_hopf_morphism(phi, alg_of(pa), alg_of(pb))
                psi = build_witness_map(sb, sa,
                                        build_inverse_witness(sa, w), field)
                ok &= compose_morphisms(phi, psi) == \
                    identity_morphism(alg_of(pa))
                checked += 1
    report(capfd, 6, ok, f"{checked} witness maps are Hopf morphisms and compose "
                  "with their inverses to the exact identity (dims up to 200)")


def test_criterion_7_oracle_agreement(capfd):
    start = time.perf_counter()
    ok = True
    compared = 0
    for (m, n) in ((2, 3), (3, 3), (3, 4)):
        field = CyclotomicField(math.lcm(2, m, n))
        for pa, pb in itertools.product(parameter_pairs(m, n, field),
                                        repeat=2):
            sa = dihedral_smash_spec(m, n, *pa)
            sb = dihedral_smash_spec(m, n, *pb)
            fast = are_isomorphic(sa, sb, field) is not None
            slow = oracle_isomorphic(sa, sb, field) is not None
            ok &= fast == slow
            compared += 1
    elapsed = time.perf_counter() - start
    ok &= elapsed < 600.0
    report(capfd, 7, ok, f"criterion <=> brute-force oracle on {compared} pairs, "
                  f"{elapsed:.1f}s < 600s")


def test_criterion_8_equivalence_relation(capfd):
    field = CyclotomicField(12)
    pairs = parameter_pairs(3, 4, field)
    rel = {}
    for pa, pb in itertools.product(pairs, repeat=2):
        rel[(pa, pb)] = are_isomorphic(dihedral_smash_spec(3, 4, *pa),
                                       dihedral_smash_spec(3, 4, *pb),
                                       field) is not None
    ok = all(rel[(p, p)] for p in pairs)
    ok &= all(rel[(a, b)] == rel[(b, a)]
              for a, b in itertools.product(pairs, repeat=2))
    ok &= all(rel[(a, c)]
              for a, b, c in itertools.product(pairs, repeat=3)
              if rel[(a, b)] and rel[(b, c)])
    report(capfd, 8, ok, "reflexive, symmetric and transitive over the full "
                  "parameter set at (m, n) = (3, 4)")


def test_criterion_9_serialization_round_trip(capfd):
    # _built holds every algebra constructed by criteria 1-5 above
    ok = len(_built) > 0
    for tag, alg in _built.items():
        data = finhopf_to_json(alg)
        back = finhopf_from_json(data)
        if not (structure_equal(alg, back) and finhopf_to_json(back) == data):
            ok = False
    report(capfd, 9, ok, f"JSON export/import bit-exact for all {len(_built)} "
                  "algebras built in criteria 1-6")
