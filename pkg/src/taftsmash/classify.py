"""Isomorphism testing and classification of the smash products
T^{beta,sigma}(q) built on a dihedral group (l = 2, k = n - 1, n >= 3).

Two layers:

* `are_isomorphic` decides isomorphism by an arithmetic criterion on the
  parameter exponents and returns an explicit witness; `build_witness_map`
  turns the witness into a concrete Hopf algebra isomorphism on basis
  vectors, and `build_inverse_witness` gives the witness of the inverse map.
* `oracle_isomorphic` knows nothing about the criterion: it enumerates all
  monomial candidate maps and tests the Hopf morphism equations directly.
  It exists so the fast path can be cross-checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .cyclofield import CyclotomicField
from .errors import InvalidInput, ScaleGuardExceeded
from .hopf import FinHopf, Morphism, is_hopf_morphism, is_isomorphism, morphism_matrix
from .builders import SmashSpec, TaftSpec, MetacyclicSpec, smash_index, \
    build_smash_presentation
from . import linalg


@dataclass(frozen=True)
class IsoWitness:
    """Isomorphism data (f, F, s, t; gamma): the map sends
    h^a x^b # d^i c^j  to  gamma^b q^{b(iF+jf)} h^{a+iF+jf} x^b # d^{it+js} c^j.
    """

    f: int
    F: int
    s: int
    t: int
    gamma_exp: int = 0


def _require_comparable(spec_a: SmashSpec, spec_b: SmashSpec) -> None:
    ga, gb = spec_a.group, spec_b.group
    if (spec_a.taft.m, spec_a.taft.q_exp) != (spec_b.taft.m, spec_b.taft.q_exp):
        raise InvalidInput("isomorphism test requires identical Taft data")
    if ga != gb:
        raise InvalidInput("isomorphism test requires identical groups")
    if ga.l != 2 or ga.k % ga.n != (ga.n - 1) % ga.n:
        raise InvalidInput("classification applies to dihedral groups only")
    if ga.n < 3:
        raise InvalidInput("classification requires n >= 3")


def witness_satisfies(spec_a: SmashSpec, spec_b: SmashSpec, w: IsoWitness,
                      field: CyclotomicField | None = None) -> bool:
    """The arithmetic conditions, checked mod N in the exponent lattice:
    m | 2f, m | nF, m | 2F and
    q^f = beta beta' sigma'^s,  q^F = sigma sigma'^t,  gcd(t, n) = 1."""
    _require_comparable(spec_a, spec_b)
    if field is None:
        field = CyclotomicField(spec_a.ambient())
    m, n = spec_a.taft.m, spec_a.group.n
    q_exp = spec_a.taft.resolved_q_exp(field)
    N = field.n
    if not (0 <= w.f < m and 0 <= w.F < m and 0 <= w.s < n and 0 <= w.t < n):
        return False
    if math.gcd(w.t, n) != 1:
        return False
    if (2 * w.f) % m or (n * w.F) % m or (2 * w.F) % m:
        return False
    if (q_exp * w.f) % N != (spec_a.beta_exp + spec_b.beta_exp
                             + w.s * spec_b.sigma_exp) % N:
        return False
    if (q_exp * w.F) % N != (spec_a.sigma_exp + w.t * spec_b.sigma_exp) % N:
        return False
    return True


def are_isomorphic(spec_a: SmashSpec, spec_b: SmashSpec,
                   field: CyclotomicField | None = None) -> IsoWitness | None:
    """Lexicographically smallest witness (f, F, s, t), or None."""
    _require_comparable(spec_a, spec_b)
    m, n = spec_a.taft.m, spec_a.group.n
    for f in range(m):
        for F in range(m):
            for s in range(n):
                for t in range(n):
                    w = IsoWitness(f, F, s, t)
                    if witness_satisfies(spec_a, spec_b, w, field):
                        return w
    return None


def build_witness_map(spec_a: SmashSpec, spec_b: SmashSpec, w: IsoWitness,
                      field: CyclotomicField | None = None) -> Morphism:
    """Concrete morphism (basis index -> image vector) for a valid witness."""
    if field is None:
        field = CyclotomicField(spec_a.ambient())
    base = IsoWitness(w.f, w.F, w.s, w.t)
    if not witness_satisfies(spec_a, spec_b, base, field):
        raise InvalidInput(f"witness {w} does not satisfy the isomorphism "
                           "conditions")
    m, n = spec_a.taft.m, spec_a.group.n
    q_exp = spec_a.taft.resolved_q_exp(field)
    phi: Morphism = {}
    for a in range(m):
        for b in range(m):
            for i in range(n):
                for j in range(2):
                    shift = i * w.F + j * w.f
                    coeff = field.zeta(b * (w.gamma_exp + q_exp * shift))
                    src = smash_index(a, b, i, j, spec_a)
                    dst = smash_index((a + shift) % m, b,
                                      (i * w.t + j * w.s) % n, j, spec_b)
                    phi[src] = {dst: coeff}
    return phi


def build_inverse_witness(spec_a: SmashSpec, w: IsoWitness) -> IsoWitness:
    """Witness of the inverse isomorphism (target to source)."""
    m, n = spec_a.taft.m, spec_a.group.n
    tau1 = pow(w.t, -1, n)
    tau2 = (-tau1 * w.s) % n
    f_bar = (-w.f - w.F * tau2) % m
    F_bar = (-w.F * tau1) % m
    gamma_bar = (-w.gamma_exp) % CyclotomicField(spec_a.ambient()).n \
        if w.gamma_exp else 0
    return IsoWitness(f_bar, F_bar, tau2, tau1, gamma_bar)


def dihedral_smash_spec(m: int, n: int, beta_exp: int, sigma_exp: int,
                        q_exp: int | None = None) -> SmashSpec:
    return SmashSpec(taft=TaftSpec(m=m, q_exp=q_exp),
                     group=MetacyclicSpec(l=2, n=n, k=n - 1),
                     beta_exp=beta_exp, sigma_exp=sigma_exp)


def parameter_pairs(m: int, n: int,
                    field: CyclotomicField | None = None) -> list[tuple[int, int]]:
    """All admissible (beta_exp, sigma_exp): beta^2 = 1 and sigma^{gcd(n,2)} = 1,
    as exponents mod N = lcm(2, m, n)."""
    if field is None:
        field = CyclotomicField(math.lcm(2, m, n))
    betas = sorted(r.exponent for r in field.roots_of_unity(2))
    sigmas = sorted(r.exponent for r in field.roots_of_unity(math.gcd(n, 2)))
    return [(b, s) for b in betas for s in sigmas]


def predicted_class_count(m: int, n: int) -> int:
    """Closed-form count of isomorphism classes."""
    if m % 2 == 0:
        return 1
    return 2 if n % 2 else 3


@dataclass
class ClassificationResult:
    m: int
    n: int
    q_exp: int
    parameters: list[tuple[int, int]]
    classes: list[list[tuple[int, int]]] = dc_field(default_factory=list)

    @property
    def representatives(self) -> list[tuple[int, int]]:
        return [cls[0] for cls in self.classes]

    @property
    def count(self) -> int:
        return len(self.classes)


def classify(m: int, n: int, q_exp: int | None = None,
             field: CyclotomicField | None = None) -> ClassificationResult:
    """Partition the parameter pairs into isomorphism classes.  Classes are
    sorted by their lexicographically smallest representative."""
    if field is None:
        field = CyclotomicField(math.lcm(2, m, n))
    params = parameter_pairs(m, n, field)
    specs = {p: dihedral_smash_spec(m, n, *p, q_exp=q_exp) for p in params}
    resolved_q = specs[params[0]].taft.resolved_q_exp(field)
    classes: list[list[tuple[int, int]]] = []
    for p in params:
        for cls in classes:
            if are_isomorphic(specs[cls[0]], specs[p], field) is not None:
                cls.append(p)
                break
        else:
            classes.append([p])
    classes.sort(key=lambda cls: cls[0])
    return ClassificationResult(m=m, n=n, q_exp=resolved_q,
                                parameters=params, classes=classes)


ORACLE_DEFAULT_MAX = 10**6


def oracle_candidates(spec_a: SmashSpec,
                      field: CyclotomicField) -> list[IsoWitness]:
    """Every monomial candidate: gamma any nonzero root of unity, f, F free
    in [0, m), s in [0, n), t a unit mod n.  No arithmetic conditions."""
    m, n = spec_a.taft.m, spec_a.group.n
    return [IsoWitness(f, F, s, t, g)
            for g in range(field.n)
            for f in range(m) for F in range(m)
            for s in range(n) for t in range(n) if math.gcd(t, n) == 1]


def _monomial_map(spec_a: SmashSpec, spec_b: SmashSpec, w: IsoWitness,
                  field: CyclotomicField) -> Morphism:
    """The candidate map of shape `IsoWitness`, without any validity check."""
    m, n = spec_a.taft.m, spec_a.group.n
    q_exp = spec_a.taft.resolved_q_exp(field)
    phi: Morphism = {}
    for a in range(m):
        for b in range(m):
            for i in range(n):
                for j in range(2):
                    shift = i * w.F + j * w.f
                    coeff = field.zeta(b * (w.gamma_exp + q_exp * shift))
                    src = smash_index(a, b, i, j, spec_a)
                    dst = smash_index((a + shift) % m, b,
                                      (i * w.t + j * w.s) % n, j, spec_b)
                    phi[src] = {dst: coeff}
    return phi


def oracle_isomorphic(spec_a: SmashSpec, spec_b: SmashSpec,
                      field: CyclotomicField | None = None,
                      max_candidates: int = ORACLE_DEFAULT_MAX) -> Morphism | None:
    """Brute-force isomorphism decision: try every monomial candidate and
    check the Hopf morphism equations and invertibility directly."""
    _require_comparable(spec_a, spec_b)
    if field is None:
        field = CyclotomicField(spec_a.ambient())
    alg_a = build_smash_presentation(spec_a, field)
    alg_b = build_smash_presentation(spec_b, field)
    candidates = oracle_candidates(spec_a, field)
    if len(candidates) > max_candidates:
        raise ScaleGuardExceeded(
            f"{len(candidates)} oracle candidates exceed bound {max_candidates}")
    for w in candidates:
        phi = _monomial_map(spec_a, spec_b, w, field)
        if not is_hopf_morphism(phi, alg_a, alg_b):
            continue
        if linalg.invert(morphism_matrix(phi, alg_a, alg_b), field) is not None:
            return phi
    return None
