"""Finite-dimensional Hopf algebras by basis-indexed structure constants.

A FinHopf stores sparse tensors for multiplication, comultiplication, counit
and antipode over a fixed cyclotomic field, together with exact verifiers for
every axiom, solvers for group-likes and skew-primitives, and a morphism
checker.  All checks are exact; a failed identity is a failed check, never a
tolerance question.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .cyclofield import CyclotomicField, CycScalar
from .errors import MalformedInput, InvalidInput
from . import linalg

# Sparse vector: basis index -> nonzero CycScalar.
Vec = dict[int, CycScalar]
# Sparse element of H (x) H: (i, j) -> nonzero CycScalar.
TensorVec = dict[tuple[int, int], CycScalar]


def add_into(dst: dict, key, c: CycScalar) -> None:
    cur = dst.get(key)
    tot = c if cur is None else cur + c
    if tot:
        dst[key] = tot
    elif cur is not None:
        del dst[key]


def scale(vec: dict, c: CycScalar) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in vec.items()}


def vec_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        add_into(out, k, -v)
    return out


class FinHopf:
    """Hopf algebra on basis e_0, ..., e_{dim-1} with explicit structure constants.

    mul[(i, j)] is the expansion of e_i * e_j; comul[i] the expansion of
    Delta(e_i) in the tensor basis; antipode[i] the expansion of S(e_i).
    Instances are immutable by convention once built.
    """

    def __init__(self, field: CyclotomicField, labels: list[str],
                 mul: dict[tuple[int, int], Vec], unit: Vec,
                 comul: dict[int, TensorVec], counit: Vec,
                 antipode: dict[int, Vec]):
        self.field = field
        self.dim = len(labels)
        self.labels = list(labels)
        self.mul = mul
        self.unit = unit
        self.comul = comul
        self.counit = counit
        self.antipode = antipode
        self._check_shapes()

    def _check_shapes(self):
        d = self.dim
        for (i, j), vec in self.mul.items():
            if not (0 <= i < d and 0 <= j < d) or any(not 0 <= k < d for k in vec):
                raise MalformedInput("multiplication tensor index out of range")
        for i, tv in self.comul.items():
            if not 0 <= i < d or any(not (0 <= j < d and 0 <= k < d) for j, k in tv):
                raise MalformedInput("comultiplication tensor index out of range")
        for vec in (self.unit, self.counit):
            if any(not 0 <= k < d for k in vec):
                raise MalformedInput("unit/counit index out of range")
        for i, vec in self.antipode.items():
            if not 0 <= i < d or any(not 0 <= k < d for k in vec):
                raise MalformedInput("antipode index out of range")

    # -- linear extensions -------------------------------------------------

    def basis_vec(self, i: int) -> Vec:
        return {i: self.field.one}

    def basis_product(self, i: int, j: int) -> Vec:
        return self.mul.get((i, j), {})

    def product(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, ci in u.items():
            for j, cj in v.items():
                c = ci * cj
                if not c:
                    continue
                for k, ck in self.basis_product(i, j).items():
                    add_into(out, k, c * ck)
        return out

    def comul_vec(self, u: Vec) -> TensorVec:
        out: TensorVec = {}
        for i, ci in u.items():
            for jk, c in self.comul.get(i, {}).items():
                add_into(out, jk, ci * c)
        return out

    def counit_vec(self, u: Vec) -> CycScalar:
        tot = self.field.zero
        for i, ci in u.items():
            eps = self.counit.get(i)
            if eps is not None:
                tot = tot + ci * eps
        return tot

    def antipode_vec(self, u: Vec) -> Vec:
        out: Vec = {}
        for i, ci in u.items():
            for k, ck in self.antipode.get(i, {}).items():
                add_into(out, k, ci * ck)
        return out

    def tensor_product(self, tu: TensorVec, tv: TensorVec) -> TensorVec:
        """Componentwise product in H (x) H."""
        out: TensorVec = {}
        for (i1, i2), c1 in tu.items():
            for (j1, j2), c2 in tv.items():
                c = c1 * c2
                if not c:
                    continue
                for k1, ck1 in self.basis_product(i1, j1).items():
                    for k2, ck2 in self.basis_product(i2, j2).items():
                        add_into(out, (k1, k2), c * ck1 * ck2)
        return out

    def power(self, u: Vec, k: int) -> Vec:
        out = dict(self.unit)
        for _ in range(k):
            out = self.product(out, u)
        return out

    def label_index(self, label: str) -> int:
        return self.labels.index(label)


@dataclass
class HopfElement:
    """An element of a FinHopf, by coordinates in its basis."""

    algebra: FinHopf
    coords: Vec

    def __eq__(self, other):
        return (
            isinstance(other, HopfElement)
            and self.algebra is other.algebra
            and self.coords == other.coords
        )


@dataclass
class AxiomReport:
    """Per-axiom pass/fail, with human-readable failure notes."""

    associativity: bool = True
    unitality: bool = True
    coassociativity: bool = True
    counit: bool = True
    bialgebra: bool = True
    antipode: bool = True
    failures: list = dc_field(default_factory=list)

    SUITES = ("associativity", "unitality", "coassociativity",
              "counit", "bialgebra", "antipode")

    @property
    def all_pass(self) -> bool:
        return all(getattr(self, name) for name in self.SUITES)

    @property
    def passed_count(self) -> int:
        return sum(getattr(self, name) for name in self.SUITES)


def verify_hopf(h: FinHopf) -> AxiomReport:
    """Check all six Hopf axiom suites exactly on every basis tuple."""
    rep = AxiomReport()
    dim = h.dim

    for i in range(dim):
        for j in range(dim):
            ij = h.basis_product(i, j)
            for k in range(dim):
                lhs = h.product(ij, h.basis_vec(k))
                rhs = h.product(h.basis_vec(i), h.basis_product(j, k))
                if lhs != rhs:
                    rep.associativity = False
                    rep.failures.append(f"associativity fails at ({i},{j},{k})")
                    break
            if not rep.associativity:
                break
        if not rep.associativity:
            break

    for i in range(dim):
        e = h.basis_vec(i)
        if h.product(h.unit, e) != e or h.product(e, h.unit) != e:
            rep.unitality = False
            rep.failures.append(f"unitality fails at {i}")
            break

    for i in range(dim):
        lhs: dict = {}
        rhs: dict = {}
        for (j, k), c in h.comul.get(i, {}).items():
            for (a, b), c2 in h.comul.get(j, {}).items():
                add_into(lhs, (a, b, k), c * c2)
            for (a, b), c2 in h.comul.get(k, {}).items():
                add_into(rhs, (j, a, b), c * c2)
        if lhs != rhs:
            rep.coassociativity = False
            rep.failures.append(f"coassociativity fails at {i}")
            break

    for i in range(dim):
        left: Vec = {}
        right: Vec = {}
        for (j, k), c in h.comul.get(i, {}).items():
            eps_j = h.counit.get(j)
            if eps_j is not None:
                add_into(left, k, c * eps_j)
            eps_k = h.counit.get(k)
            if eps_k is not None:
                add_into(right, j, c * eps_k)
        if left != h.basis_vec(i) or right != h.basis_vec(i):
            rep.counit = False
            rep.failures.append(f"counit law fails at {i}")
            break

    unit_tensor = {(i, j): ci * cj for i, ci in h.unit.items()
                   for j, cj in h.unit.items()}
    if h.comul_vec(h.unit) != unit_tensor or h.counit_vec(h.unit) != h.field.one:
        rep.bialgebra = False
        rep.failures.append("Delta/epsilon not unital")
    for i in range(dim):
        if not rep.bialgebra:
            break
        di = h.comul.get(i, {})
        for j in range(dim):
            prod = h.basis_product(i, j)
            if h.comul_vec(prod) != h.tensor_product(di, h.comul.get(j, {})):
                rep.bialgebra = False
                rep.failures.append(f"Delta not multiplicative at ({i},{j})")
                break
            eps_i = h.counit.get(i, h.field.zero)
            eps_j = h.counit.get(j, h.field.zero)
            if h.counit_vec(prod) != eps_i * eps_j:
                rep.bialgebra = False
                rep.failures.append(f"epsilon not multiplicative at ({i},{j})")
                break

    for i in range(dim):
        left: Vec = {}
        right: Vec = {}
        for (j, k), c in h.comul.get(i, {}).items():
            for t, ct in h.product(h.antipode.get(j, {}), h.basis_vec(k)).items():
                add_into(left, t, c * ct)
            for t, ct in h.product(h.basis_vec(j), h.antipode.get(k, {})).items():
                add_into(right, t, c * ct)
        target = scale(h.unit, h.counit.get(i, h.field.zero))
        if left != target or right != target:
            rep.antipode = False
            rep.failures.append(f"antipode convolution fails at {i}")
            break

    return rep


def group_likes(h: FinHopf) -> list[HopfElement]:
    """All basis-supported group-likes, closed under multiplication.

    Every Hopf algebra built by this package is pointed with its group-likes
    sitting on basis vectors, so candidates are basis vectors plus products
    of previously found group-likes; each candidate is checked exactly.
    """
    found: list[Vec] = []

    def is_gl(vec: Vec) -> bool:
        if not vec or h.counit_vec(vec) != h.field.one:
            return False
        sq = {(i, j): ci * cj for i, ci in vec.items() for j, cj in vec.items()}
        return h.comul_vec(vec) == {k: v for k, v in sq.items() if v}

    for i in range(h.dim):
        vec = h.basis_vec(i)
        if is_gl(vec):
            found.append(vec)
    # Closure under product (a safety net for non-basis group-likes).
    frontier = list(found)
    while frontier:
        nxt = []
        for g in frontier:
            for g2 in found:
                prod = h.product(g, g2)
                if prod not in found and is_gl(prod):
                    nxt.append(prod)
        found.extend(nxt)
        frontier = nxt
    return [HopfElement(h, vec) for vec in found]


def is_group_like(h: FinHopf, g: HopfElement) -> bool:
    vec = g.coords
    if not vec or h.counit_vec(vec) != h.field.one:
        return False
    sq = {(i, j): ci * cj for i, ci in vec.items() for j, cj in vec.items()}
    return h.comul_vec(vec) == {k: v for k, v in sq.items() if v}


def skew_primitives(h: FinHopf, g: HopfElement, k: HopfElement) -> list[HopfElement]:
    """Basis of {y : Delta(y) = y (x) g + k (x) y}, by exact linear solve."""
    if not is_group_like(h, g) or not is_group_like(h, k):
        raise InvalidInput("skew_primitives requires group-like arguments")
    f = h.field
    # Rows indexed by tensor pairs, columns by the unknown coordinates.
    rows_index: dict[tuple[int, int], int] = {}
    columns: list[dict[int, CycScalar]] = []
    for i in range(h.dim):
        col: dict = {}
        for jk, c in h.comul.get(i, {}).items():
            add_into(col, jk, c)
        for j, cg in g.coords.items():
            add_into(col, (i, j), -cg)
        for j, ck in k.coords.items():
            add_into(col, (j, i), -ck)
        columns.append(col)
        for jk in col:
            rows_index.setdefault(jk, len(rows_index))
    mat = [[f.zero] * h.dim for _ in range(len(rows_index))]
    for i, col in enumerate(columns):
        for jk, c in col.items():
            mat[rows_index[jk]][i] = c
    basis = linalg.nullspace(mat, f)
    out = []
    for vec in basis:
        coords = {i: c for i, c in enumerate(vec) if c}
        out.append(HopfElement(h, coords))
    return out


# -- morphisms -------------------------------------------------------------

# A morphism candidate maps source basis index -> image Vec in the target.
Morphism = dict[int, Vec]


def apply_morphism(phi: Morphism, u: Vec) -> Vec:
    out: Vec = {}
    for i, ci in u.items():
        for k, ck in phi.get(i, {}).items():
            add_into(out, k, ci * ck)
    return out


def is_hopf_morphism(phi: Morphism, a: FinHopf, b: FinHopf,
                     check_antipode: bool = True) -> bool:
    """True iff phi preserves unit, counit, multiplication and comultiplication
    (and, re-checked, the antipode) on every basis element."""
    if any(not 0 <= i < a.dim for i in phi):
        raise MalformedInput("morphism row index out of range")
    if any(not 0 <= k < b.dim for vec in phi.values() for k in vec):
        raise MalformedInput("morphism column index out of range")
    if apply_morphism(phi, a.unit) != b.unit:
        return False
    for i in range(a.dim):
        if b.counit_vec(phi.get(i, {})) != a.counit.get(i, a.field.zero):
            return False
    for i in range(a.dim):
        img = b.comul_vec(phi.get(i, {}))
        pushed: TensorVec = {}
        for (j, k), c in a.comul.get(i, {}).items():
            for j2, cj in phi.get(j, {}).items():
                for k2, ck in phi.get(k, {}).items():
                    add_into(pushed, (j2, k2), c * cj * ck)
        if img != pushed:
            return False
    for i in range(a.dim):
        pi = phi.get(i, {})
        for j in range(a.dim):
            lhs = apply_morphism(phi, a.basis_product(i, j))
            rhs = b.product(pi, phi.get(j, {}))
            if lhs != rhs:
                return False
    if check_antipode:
        for i in range(a.dim):
            if apply_morphism(phi, a.antipode.get(i, {})) != \
                    b.antipode_vec(phi.get(i, {})):
                return False
    return True


def morphism_matrix(phi: Morphism, a: FinHopf, b: FinHopf) -> list[list[CycScalar]]:
    mat = [[a.field.zero] * b.dim for _ in range(a.dim)]
    for i, vec in phi.items():
        for k, c in vec.items():
            mat[i][k] = c
    return mat


def is_isomorphism(phi: Morphism, a: FinHopf, b: FinHopf) -> bool:
    """True iff phi is a Hopf morphism with an invertible matrix (exact rank)."""
    if a.dim != b.dim:
        return False
    if not is_hopf_morphism(phi, a, b):
        return False
    return linalg.invert(morphism_matrix(phi, a, b), a.field) is not None


def compose_morphisms(phi: Morphism, psi: Morphism) -> Morphism:
    """psi after phi, as a morphism table."""
    out: Morphism = {}
    for i, vec in phi.items():
        img: Vec = {}
        for k, c in vec.items():
            for t, ct in psi.get(k, {}).items():
                add_into(img, t, c * ct)
        if img:
            out[i] = img
    return out


def identity_morphism(h: FinHopf) -> Morphism:
    return {i: {i: h.field.one} for i in range(h.dim)}


# -- serialization ---------------------------------------------------------

def finhopf_to_json(h: FinHopf) -> dict:
    def s(c: CycScalar):
        return c.to_json()

    return {
        "N": h.field.n,
        "dim": h.dim,
        "labels": list(h.labels),
        "mul": [[i, j, k, s(c)]
                for (i, j) in sorted(h.mul)
                for k, c in sorted(h.mul[(i, j)].items())],
        "comul": [[i, j, k, s(c)]
                  for i in sorted(h.comul)
                  for (j, k), c in sorted(h.comul[i].items())],
        "counit": [s(h.counit.get(i, h.field.zero)) for i in range(h.dim)],
        "antipode": [[s(h.antipode.get(i, {}).get(j, h.field.zero))
                      for j in range(h.dim)] for i in range(h.dim)],
        "unit": [s(h.unit.get(i, h.field.zero)) for i in range(h.dim)],
    }


def finhopf_from_json(data: dict, field: CyclotomicField | None = None) -> FinHopf:
    try:
        n = data["N"]
        dim = data["dim"]
        labels = data["labels"]
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"missing FinHopf field: {exc}") from exc
    if field is None:
        field = CyclotomicField(n)
    elif field.n != n:
        raise MalformedInput(f"field order mismatch: {field.n} vs {n}")
    if len(labels) != dim:
        raise MalformedInput("label count does not match dim")

    def p(sc) -> CycScalar:
        return CycScalar.from_json(field, sc)

    mul: dict[tuple[int, int], Vec] = {}
    for i, j, k, c in data["mul"]:
        mul.setdefault((i, j), {})[k] = p(c)
    comul: dict[int, TensorVec] = {}
    for i, j, k, c in data["comul"]:
        comul.setdefault(i, {})[(j, k)] = p(c)
    counit = {i: v for i, v in
              ((i, p(c)) for i, c in enumerate(data["counit"])) if v}
    unit = {i: p(c) for i, c in enumerate(data["unit"])}
    unit = {i: v for i, v in unit.items() if v}
    antipode: dict[int, Vec] = {}
    for i, row in enumerate(data["antipode"]):
        vec = {j: p(c) for j, c in enumerate(row)}
        vec = {j: v for j, v in vec.items() if v}
        if vec:
            antipode[i] = vec
    return FinHopf(field, labels, mul, unit, comul, counit, antipode)


def structure_equal(a: FinHopf, b: FinHopf) -> bool:
    """Structure-constant-for-structure-constant equality (labels included)."""
    return (
        a.field.n == b.field.n
        and a.labels == b.labels
        and a.mul == b.mul
        and a.unit == b.unit
        and a.comul == b.comul
        and a.counit == b.counit
        and a.antipode == b.antipode
    )
