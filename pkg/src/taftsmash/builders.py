"""Builders: Taft algebra, metacyclic group algebras, matched pairs,
bicrossed/smash products.

Two independent construction routes exist for the smash product: the generic
bicrossed product driven by explicit action tables, and a direct
generators-and-relations presentation with a confluent normal form
h^a x^b d^t c^i.  Both must agree structure constant for structure constant;
the test suite enforces that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclofield import CyclotomicField, CycScalar, ambient_order
from .errors import InvalidInput
from .hopf import FinHopf, Vec, TensorVec, add_into, scale

# -- specs -----------------------------------------------------------------


@dataclass(frozen=True)
class TaftSpec:
    """m >= 2 and a primitive m-th root q = zeta^q_exp (None = canonical N/m)."""

    m: int
    q_exp: int | None = None

    def resolved_q_exp(self, field: CyclotomicField) -> int:
        e = field.n // self.m if self.q_exp is None else self.q_exp % field.n
        if field.root(e).order != self.m:
            raise InvalidInput(
                f"zeta^{e} has order {field.root(e).order}, need exactly {self.m}"
            )
        return e

    def validate(self):
        if self.m < 2:
            raise InvalidInput(f"Taft parameter m must be >= 2, got {self.m}")


@dataclass(frozen=True)
class MetacyclicSpec:
    """<c, d | c^l = 1, d^n = 1, cd = d^k c>; dihedral is l=2, k=n-1."""

    l: int
    n: int
    k: int

    def validate(self):
        if min(self.l, self.n, self.k) < 1:
            raise InvalidInput("metacyclic parameters must be positive")
        if pow(self.k, self.l, self.n) != 1 % self.n:
            raise InvalidInput(
                f"need k^l = 1 mod n; got {self.k}^{self.l} mod {self.n}"
            )

    @property
    def is_dihedral(self) -> bool:
        return self.l == 2 and self.k == (self.n - 1) % self.n

    @property
    def order(self) -> int:
        return self.l * self.n


@dataclass(frozen=True)
class SmashSpec:
    """Names one smash product of a Taft algebra with a metacyclic group
    algebra: the actions are c.x = beta x, d.x = sigma x with beta, sigma
    given as exponents of the canonical root zeta."""

    taft: TaftSpec
    group: MetacyclicSpec
    beta_exp: int
    sigma_exp: int

    def ambient(self) -> int:
        return ambient_order(self.taft.m, self.group.l, self.group.n)

    def validate(self, field: CyclotomicField):
        self.taft.validate()
        self.group.validate()
        n_field = field.n
        if (self.beta_exp * self.group.l) % n_field != 0:
            raise InvalidInput(
                f"beta exponent {self.beta_exp} is not an l-th root (l={self.group.l})"
            )
        d = math.gcd(self.group.n, self.group.k - 1)
        if (self.sigma_exp * d) % n_field != 0:
            raise InvalidInput(
                f"sigma exponent {self.sigma_exp} not in U_{d}"
            )

    def to_json(self) -> dict:
        return {
            "m": self.taft.m,
            "q_exp": self.taft.q_exp,
            "l": self.group.l,
            "n": self.group.n,
            "k": self.group.k,
            "beta_exp": self.beta_exp,
            "sigma_exp": self.sigma_exp,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SmashSpec":
        return cls(
            TaftSpec(data["m"], data.get("q_exp")),
            MetacyclicSpec(data["l"], data["n"], data["k"]),
            data["beta_exp"],
            data["sigma_exp"],
        )

    def display_name(self) -> str:
        dim = self.group.l * self.group.n * self.taft.m ** 2
        q_exp = self.taft.q_exp
        if q_exp is None:
            q_exp = self.ambient() // self.taft.m  # canonical choice
        return f"T^(b{self.beta_exp},s{self.sigma_exp})_{dim}(q=z^{q_exp})"


# -- raw-tensor helpers (used while a FinHopf is still under construction) --


def _mul_vec(field, mul, u: Vec, v: Vec) -> Vec:
    out: Vec = {}
    for i, ci in u.items():
        for j, cj in v.items():
            c = ci * cj
            if not c:
                continue
            for k, ck in mul.get((i, j), {}).items():
                add_into(out, k, c * ck)
    return out


def _tensor_mul(field, mul, tu: TensorVec, tv: TensorVec) -> TensorVec:
    out: TensorVec = {}
    for (i1, i2), c1 in tu.items():
        for (j1, j2), c2 in tv.items():
            c = c1 * c2
            if not c:
                continue
            for k1, ck1 in mul.get((i1, j1), {}).items():
                for k2, ck2 in mul.get((i2, j2), {}).items():
                    add_into(out, (k1, k2), c * ck1 * ck2)
    return out


def _comul_from_generators(field, mul, unit_index: int,
                           decomposition, gen_comuls) -> dict[int, TensorVec]:
    """Delta on each basis element as the product of generator coproducts.

    decomposition(i) yields generator names with multiplicity, left to right;
    gen_comuls maps a name to Delta(generator) as a TensorVec.
    """
    comul = {}
    unit_tensor: TensorVec = {(unit_index, unit_index): field.one}
    for i, word in decomposition:
        t = unit_tensor
        for g in word:
            t = _tensor_mul(field, mul, t, gen_comuls[g])
        comul[i] = t
    return comul


def _antipode_from_generators(field, mul, unit_vec: Vec,
                              decomposition, gen_antipodes) -> dict[int, Vec]:
    """S on each basis element as the reversed product of generator images."""
    antipode = {}
    for i, word in decomposition:
        # Left-multiplying along the word yields S(g_r)...S(g_1).
        v = dict(unit_vec)
        for g in word:
            v = _mul_vec(field, mul, gen_antipodes[g], v)
        antipode[i] = v
    return antipode


# -- Taft algebra ----------------------------------------------------------


def taft_index(i: int, j: int, m: int) -> int:
    return i * m + j


def taft_label(i: int, j: int) -> str:
    return f"h^{i} x^{j}"


def build_taft(spec: TaftSpec, field: CyclotomicField | None = None) -> FinHopf:
    """The m^2-dimensional Taft algebra on basis h^i x^j with
    h^m = 1, x^m = 0, xh = q h x."""
    spec.validate()
    if field is None:
        field = CyclotomicField(ambient_order(spec.m))
    m = spec.m
    q_exp = spec.resolved_q_exp(field)
    one = field.one

    labels = [taft_label(i, j) for i in range(m) for j in range(m)]
    mul: dict[tuple[int, int], Vec] = {}
    for i1 in range(m):
        for j1 in range(m):
            for i2 in range(m):
                for j2 in range(m):
                    src = (taft_index(i1, j1, m), taft_index(i2, j2, m))
                    if j1 + j2 >= m:
                        continue  # x^m = 0 truncation
                    coeff = field.zeta(q_exp * j1 * i2)  # x^j1 h^i2 = q^{j1 i2} h^i2 x^j1
                    mul[src] = {taft_index((i1 + i2) % m, j1 + j2, m): coeff}
    unit = {0: one}
    h_idx, x_idx = taft_index(1, 0, m), taft_index(0, 1, m)
    gen_comuls = {
        "h": {(h_idx, h_idx): one},
        "x": {(x_idx, h_idx): one, (0, x_idx): one},
    }
    decomposition = [(taft_index(i, j, m), "h" * i + "x" * j)
                     for i in range(m) for j in range(m)]
    comul = _comul_from_generators(field, mul, 0, decomposition, gen_comuls)
    counit = {taft_index(i, 0, m): one for i in range(m)}
    s_h = {taft_index((m - 1) % m, 0, m): one}
    s_x = scale(_mul_vec(field, mul, {x_idx: one}, s_h), -one)
    antipode = _antipode_from_generators(field, mul, unit, decomposition,
                                         {"h": s_h, "x": s_x})
    return FinHopf(field, labels, mul, unit, comul, counit, antipode)


# -- group algebra ---------------------------------------------------------


def group_index(t: int, i: int, spec: MetacyclicSpec) -> int:
    return (t % spec.n) * spec.l + (i % spec.l)


def group_label(t: int, i: int) -> str:
    return f"d^{t} c^{i}"


def group_product_indices(spec: MetacyclicSpec, t1, i1, t2, i2) -> tuple[int, int]:
    """Normal form of (d^t1 c^i1)(d^t2 c^i2) via c^i d^t = d^{t k^i} c^i."""
    return (t1 + t2 * pow(spec.k, i1, spec.n)) % spec.n, (i1 + i2) % spec.l


def build_group_algebra(spec: MetacyclicSpec,
                        field: CyclotomicField | None = None) -> FinHopf:
    """K[D^k_{ln}] on basis d^t c^i; every basis element is group-like."""
    spec.validate()
    if field is None:
        field = CyclotomicField(ambient_order(2, spec.l, spec.n))
    one = field.one
    labels = [group_label(t, i) for t in range(spec.n) for i in range(spec.l)]
    mul: dict[tuple[int, int], Vec] = {}
    for t1 in range(spec.n):
        for i1 in range(spec.l):
            for t2 in range(spec.n):
                for i2 in range(spec.l):
                    t3, i3 = group_product_indices(spec, t1, i1, t2, i2)
                    mul[(group_index(t1, i1, spec), group_index(t2, i2, spec))] = {
                        group_index(t3, i3, spec): one
                    }
    unit = {group_index(0, 0, spec): one}
    comul = {g: {(g, g): one} for g in range(spec.order)}
    counit = {g: one for g in range(spec.order)}
    antipode: dict[int, Vec] = {}
    for t in range(spec.n):
        for i in range(spec.l):
            # inverse: c^{-i} d^{-t} in normal form
            ti, ii = group_product_indices(spec, 0, (-i) % spec.l, (-t) % spec.n, 0)
            antipode[group_index(t, i, spec)] = {group_index(ti, ii, spec): one}
    return FinHopf(field, labels, mul, unit, comul, counit, antipode)


# -- matched pairs ---------------------------------------------------------


@dataclass
class MatchedPairData:
    """Explicit action tables for a matched pair (A = Taft, H = group algebra).

    left[(y, a)] is y |> a as a vector in A; right[(y, a)] is y <| a in H,
    for basis indices y of H and a of A.
    """

    left: dict[tuple[int, int], Vec]
    right: dict[tuple[int, int], Vec]
    params: tuple[int, int] | None = None  # (beta_exp, sigma_exp) when parametric

    def act_left(self, a_alg: FinHopf, hvec: Vec, avec: Vec) -> Vec:
        out: Vec = {}
        for y, cy in hvec.items():
            for a, ca in avec.items():
                c = cy * ca
                if not c:
                    continue
                for k, ck in self.left.get((y, a), {}).items():
                    add_into(out, k, c * ck)
        return out

    def act_right(self, h_alg: FinHopf, hvec: Vec, avec: Vec) -> Vec:
        out: Vec = {}
        for y, cy in hvec.items():
            for a, ca in avec.items():
                c = cy * ca
                if not c:
                    continue
                for k, ck in self.right.get((y, a), {}).items():
                    add_into(out, k, c * ck)
        return out


def trivial_right_action(a_alg: FinHopf, h_alg: FinHopf) -> dict[tuple[int, int], Vec]:
    table = {}
    for y in range(h_alg.dim):
        for a in range(a_alg.dim):
            eps = a_alg.counit.get(a)
            if eps:
                table[(y, a)] = {y: eps}
    return table


def verify_matched_pair(a_alg: FinHopf, h_alg: FinHopf,
                        mp: MatchedPairData) -> tuple[bool, str | None]:
    """Exhaustive exact check of the module, module-coalgebra and (mp1)-(mp4)
    axioms on every basis pair/triple.  Returns (ok, first failure)."""
    f = a_alg.field
    left, right = mp.act_left, mp.act_right
    dim_a, dim_h = a_alg.dim, h_alg.dim

    def bv_a(i):
        return a_alg.basis_vec(i)

    def bv_h(i):
        return h_alg.basis_vec(i)

    # mp1 and unit module laws
    for y in range(dim_h):
        eps_y = h_alg.counit.get(y, f.zero)
        if left(a_alg, bv_h(y), a_alg.unit) != scale(a_alg.unit, eps_y):
            return False, f"mp1 fails: y={y} on 1_A"
        if right(h_alg, bv_h(y), a_alg.unit) != bv_h(y):
            return False, f"right module unit fails at y={y}"
    for a in range(dim_a):
        eps_a = a_alg.counit.get(a, f.zero)
        if right(h_alg, h_alg.unit, bv_a(a)) != scale(h_alg.unit, eps_a):
            return False, f"mp1 fails: 1_H on a={a}"
        if left(a_alg, h_alg.unit, bv_a(a)) != bv_a(a):
            return False, f"left module unit fails at a={a}"

    # module coalgebra conditions
    for y in range(dim_h):
        dy = h_alg.comul.get(y, {})
        for a in range(dim_a):
            da = a_alg.comul.get(a, {})
            la = left(a_alg, bv_h(y), bv_a(a))
            expect: TensorVec = {}
            for (y1, y2), cy in dy.items():
                for (a1, a2), ca in da.items():
                    v1 = left(a_alg, bv_h(y1), bv_a(a1))
                    v2 = left(a_alg, bv_h(y2), bv_a(a2))
                    for k1, c1 in v1.items():
                        for k2, c2 in v2.items():
                            add_into(expect, (k1, k2), cy * ca * c1 * c2)
            if a_alg.comul_vec(la) != expect:
                return False, f"left module coalgebra fails at (y={y}, a={a})"
            eps = h_alg.counit.get(y, f.zero) * a_alg.counit.get(a, f.zero)
            if a_alg.counit_vec(la) != eps:
                return False, f"left action counit fails at (y={y}, a={a})"
            ra = right(h_alg, bv_h(y), bv_a(a))
            expect = {}
            for (y1, y2), cy in dy.items():
                for (a1, a2), ca in da.items():
                    v1 = right(h_alg, bv_h(y1), bv_a(a1))
                    v2 = right(h_alg, bv_h(y2), bv_a(a2))
                    for k1, c1 in v1.items():
                        for k2, c2 in v2.items():
                            add_into(expect, (k1, k2), cy * ca * c1 * c2)
            if h_alg.comul_vec(ra) != expect:
                return False, f"right module coalgebra fails at (y={y}, a={a})"
            if h_alg.counit_vec(ra) != eps:
                return False, f"right action counit fails at (y={y}, a={a})"

    # module associativity laws
    for y in range(dim_h):
        for z in range(dim_h):
            yz = h_alg.basis_product(y, z)
            for a in range(dim_a):
                if left(a_alg, yz, bv_a(a)) != \
                        left(a_alg, bv_h(y), left(a_alg, bv_h(z), bv_a(a))):
                    return False, f"left module law fails at (y={y}, z={z}, a={a})"
    for y in range(dim_h):
        for a in range(dim_a):
            ya = right(h_alg, bv_h(y), bv_a(a))
            for b in range(dim_a):
                if right(h_alg, ya, bv_a(b)) != \
                        right(h_alg, bv_h(y), a_alg.basis_product(a, b)):
                    return False, f"right module law fails at (y={y}, a={a}, b={b})"

    # mp2
    for y in range(dim_h):
        dy = h_alg.comul.get(y, {})
        for a in range(dim_a):
            da = a_alg.comul.get(a, {})
            for b in range(dim_a):
                lhs = left(a_alg, bv_h(y), a_alg.basis_product(a, b))
                rhs: Vec = {}
                for (y1, y2), cy in dy.items():
                    for (a1, a2), ca in da.items():
                        part1 = left(a_alg, bv_h(y1), bv_a(a1))
                        h_part = right(h_alg, bv_h(y2), bv_a(a2))
                        part2 = left(a_alg, h_part, bv_a(b))
                        for k, ck in a_alg.product(part1, part2).items():
                            add_into(rhs, k, cy * ca * ck)
                if lhs != rhs:
                    return False, f"mp2 fails at (y={y}, a={a}, b={b})"

    # mp3
    for y in range(dim_h):
        for z in range(dim_h):
            dz = h_alg.comul.get(z, {})
            yz = h_alg.basis_product(y, z)
            for a in range(dim_a):
                da = a_alg.comul.get(a, {})
                lhs = right(h_alg, yz, bv_a(a))
                rhs: Vec = {}
                for (z1, z2), cz in dz.items():
                    for (a1, a2), ca in da.items():
                        inner = left(a_alg, bv_h(z1), bv_a(a1))
                        part1 = right(h_alg, bv_h(y), inner)
                        part2 = right(h_alg, bv_h(z2), bv_a(a2))
                        for k, ck in h_alg.product(part1, part2).items():
                            add_into(rhs, k, cz * ca * ck)
                if lhs != rhs:
                    return False, f"mp3 fails at (y={y}, z={z}, a={a})"

    # mp4
    for y in range(dim_h):
        dy = h_alg.comul.get(y, {})
        for a in range(dim_a):
            da = a_alg.comul.get(a, {})
            lhs: TensorVec = {}
            rhs: TensorVec = {}
            for (y1, y2), cy in dy.items():
                for (a1, a2), ca in da.items():
                    r1 = right(h_alg, bv_h(y1), bv_a(a1))
                    l2 = left(a_alg, bv_h(y2), bv_a(a2))
                    for k1, c1 in r1.items():
                        for k2, c2 in l2.items():
                            add_into(lhs, (k1, k2), cy * ca * c1 * c2)
                    r2 = right(h_alg, bv_h(y2), bv_a(a2))
                    l1 = left(a_alg, bv_h(y1), bv_a(a1))
                    for k1, c1 in r2.items():
                        for k2, c2 in l1.items():
                            add_into(rhs, (k1, k2), cy * ca * c1 * c2)
            if lhs != rhs:
                return False, f"mp4 fails at (y={y}, a={a})"

    return True, None


def build_matched_pair(spec: SmashSpec,
                       field: CyclotomicField | None = None,
                       verify: bool = True) -> MatchedPairData:
    """The parametric matched pair d^t c^i |> h^a x^b = beta^{ib} sigma^{tb}
    h^a x^b with trivial right action, re-verified against (mp1)-(mp4)."""
    if field is None:
        field = CyclotomicField(spec.ambient())
    spec.validate(field)
    taft = build_taft(spec.taft, field)
    group = build_group_algebra(spec.group, field)
    m, g = spec.taft.m, spec.group
    left: dict[tuple[int, int], Vec] = {}
    for t in range(g.n):
        for i in range(g.l):
            y = group_index(t, i, g)
            for a in range(m):
                for b in range(m):
                    coeff = field.zeta(spec.beta_exp * i * b + spec.sigma_exp * t * b)
                    left[(y, taft_index(a, b, m))] = {taft_index(a, b, m): coeff}
    mp = MatchedPairData(left=left,
                         right=trivial_right_action(taft, group),
                         params=(spec.beta_exp % field.n, spec.sigma_exp % field.n))
    if verify:
        ok, reason = verify_matched_pair(taft, group, mp)
        if not ok:
            raise InvalidInput(f"matched pair verification failed: {reason}")
    return mp


# -- bicrossed product -----------------------------------------------------


def build_bicrossed(a_alg: FinHopf, h_alg: FinHopf, mp: MatchedPairData,
                    verify: bool = True,
                    labels: list[str] | None = None) -> FinHopf:
    """A bowtie H on the tensor coalgebra A (x) H; dimension dim A * dim H."""
    if verify:
        ok, reason = verify_matched_pair(a_alg, h_alg, mp)
        if not ok:
            raise InvalidInput(f"invalid matched pair: {reason}")
    f = a_alg.field
    dim_h = h_alg.dim

    def idx(a, y):
        return a * dim_h + y

    if labels is None:
        labels = [f"{la} # {ly}" for la in a_alg.labels for ly in h_alg.labels]

    mul: dict[tuple[int, int], Vec] = {}
    for a in range(a_alg.dim):
        for y in range(dim_h):
            dy = h_alg.comul.get(y, {})
            for b in range(a_alg.dim):
                db = a_alg.comul.get(b, {})
                for z in range(dim_h):
                    out: Vec = {}
                    for (y1, y2), cy in dy.items():
                        for (b1, b2), cb in db.items():
                            avec = a_alg.product(
                                a_alg.basis_vec(a),
                                mp.left.get((y1, b1), {}))
                            hvec = h_alg.product(
                                mp.right.get((y2, b2), {}),
                                h_alg.basis_vec(z))
                            for ka, ca in avec.items():
                                for kh, ch in hvec.items():
                                    add_into(out, idx(ka, kh), cy * cb * ca * ch)
                    if out:
                        mul[(idx(a, y), idx(b, z))] = out

    unit: Vec = {}
    for a, ca in a_alg.unit.items():
        for y, cy in h_alg.unit.items():
            add_into(unit, idx(a, y), ca * cy)

    comul: dict[int, TensorVec] = {}
    counit: Vec = {}
    antipode: dict[int, Vec] = {}
    for a in range(a_alg.dim):
        da = a_alg.comul.get(a, {})
        sa_eps = a_alg.counit.get(a, f.zero)
        for y in range(dim_h):
            dy = h_alg.comul.get(y, {})
            tv: TensorVec = {}
            for (a1, a2), ca in da.items():
                for (y1, y2), cy in dy.items():
                    add_into(tv, (idx(a1, y1), idx(a2, y2)), ca * cy)
            comul[idx(a, y)] = tv
            eps = sa_eps * h_alg.counit.get(y, f.zero)
            if eps:
                counit[idx(a, y)] = eps
            sv: Vec = {}
            for (a1, a2), ca in da.items():
                for (y1, y2), cy in dy.items():
                    sh2 = h_alg.antipode.get(y2, {})
                    sa2 = a_alg.antipode.get(a2, {})
                    avec = mp.act_left(a_alg, sh2, sa2)
                    sh1 = h_alg.antipode.get(y1, {})
                    sa1 = a_alg.antipode.get(a1, {})
                    hvec = mp.act_right(h_alg, sh1, sa1)
                    for ka, c1 in avec.items():
                        for kh, c2 in hvec.items():
                            add_into(sv, idx(ka, kh), ca * cy * c1 * c2)
            antipode[idx(a, y)] = sv

    return FinHopf(f, labels, mul, unit, comul, counit, antipode)


# -- smash product by presentation ----------------------------------------


def smash_index(a: int, b: int, t: int, i: int, spec: SmashSpec) -> int:
    m, g = spec.taft.m, spec.group
    return taft_index(a, b, m) * g.order + group_index(t, i, g)


def smash_label(a: int, b: int, t: int, i: int) -> str:
    return f"h^{a} x^{b} # d^{t} c^{i}"


def build_smash_presentation(spec: SmashSpec,
                             field: CyclotomicField | None = None) -> FinHopf:
    """T^{beta,sigma}_{lnm^2}(q) from generators and relations, on the normal
    form basis h^a x^b d^t c^i.  Rewriting moves c past d via cd = d^k c and
    x past h via xh = qhx; c, d commute with h; cx = beta xc, dx = sigma xd."""
    if field is None:
        field = CyclotomicField(spec.ambient())
    spec.validate(field)
    m, g = spec.taft.m, spec.group
    q_exp = spec.taft.resolved_q_exp(field)
    one = field.one

    ranges = [(a, b, t, i) for a in range(m) for b in range(m)
              for t in range(g.n) for i in range(g.l)]
    labels = [smash_label(a, b, t, i) for (a, b, t, i) in ranges]

    mul: dict[tuple[int, int], Vec] = {}
    for (a, b, t, i) in ranges:
        src = smash_index(a, b, t, i, spec)
        for (a2, b2, t2, i2) in ranges:
            if b + b2 >= m:
                continue
            # d^t c^i h^{a2} x^{b2} = beta^{i b2} sigma^{t b2} h^{a2} x^{b2} d^t c^i
            # then x^b h^{a2} = q^{b a2} h^{a2} x^b
            e = spec.beta_exp * i * b2 + spec.sigma_exp * t * b2 + q_exp * b * a2
            t3, i3 = group_product_indices(g, t, i, t2, i2)
            dst = smash_index((a + a2) % m, b + b2, t3, i3, spec)
            mul[(src, smash_index(a2, b2, t2, i2, spec))] = {dst: field.zeta(e)}

    unit = {smash_index(0, 0, 0, 0, spec): one}
    h_i = smash_index(1, 0, 0, 0, spec)
    x_i = smash_index(0, 1, 0, 0, spec)
    d_i = smash_index(0, 0, 1, 0, spec)
    c_i = smash_index(0, 0, 0, 1, spec)
    gen_comuls = {
        "h": {(h_i, h_i): one},
        "x": {(x_i, h_i): one, (smash_index(0, 0, 0, 0, spec), x_i): one},
        "d": {(d_i, d_i): one},
        "c": {(c_i, c_i): one},
    }
    decomposition = [(smash_index(a, b, t, i, spec),
                      "h" * a + "x" * b + "d" * t + "c" * i)
                     for (a, b, t, i) in ranges]
    comul = _comul_from_generators(field, mul, smash_index(0, 0, 0, 0, spec),
                                   decomposition, gen_comuls)
    counit = {smash_index(a, 0, t, i, spec): one
              for a in range(m) for t in range(g.n) for i in range(g.l)}
    s_h = {smash_index((m - 1) % m, 0, 0, 0, spec): one}
    s_x = scale(_mul_vec(field, mul, {x_i: one}, s_h), -one)
    s_c = {smash_index(0, 0, 0, (g.l - 1) % g.l, spec): one}
    s_d = {smash_index(0, 0, (g.n - 1) % g.n, 0, spec): one}
    antipode = _antipode_from_generators(
        field, mul, unit, decomposition,
        {"h": s_h, "x": s_x, "d": s_d, "c": s_c})
    return FinHopf(field, labels, mul, unit, comul, counit, antipode)


def build_smash_via_actions(spec: SmashSpec,
                            field: CyclotomicField | None = None,
                            verify: bool = True) -> FinHopf:
    """The same Hopf algebra through the bicrossed-product route, with the
    presentation's basis labels so the two routes are directly comparable."""
    if field is None:
        field = CyclotomicField(spec.ambient())
    taft = build_taft(spec.taft, field)
    group = build_group_algebra(spec.group, field)
    mp = build_matched_pair(spec, field, verify=verify)
    m, g = spec.taft.m, spec.group
    labels = [smash_label(a, b, t, i)
              for a in range(m) for b in range(m)
              for t in range(g.n) for i in range(g.l)]
    return build_bicrossed(taft, group, mp, verify=False, labels=labels)
