"""Exhaustive search over generator-level action candidates.

The search space follows the skew-primitive classification: a generator g of
the group can only send h to a group-like h^i and x to an element of
P_{h^i,1}, while on the right it can only send h to a group element and x to
a multiple of (g - g<|h).  Everything else (alpha = 0, trivial right action,
beta and sigma roots of unity of the correct orders) must be *rediscovered*
by the search, never assumed: a candidate dies at the first group relation,
Taft relation or matched-pair axiom it violates.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .cyclofield import CyclotomicField, CycScalar, ambient_order
from .errors import InvalidInput, ScaleGuardExceeded
from .hopf import FinHopf, Vec, add_into, scale
from .builders import (
    TaftSpec, MetacyclicSpec, MatchedPairData, build_taft,
    build_group_algebra, group_index, taft_index, verify_matched_pair,
)

DEFAULT_MAX_CANDIDATES = 10**7


@dataclass(frozen=True)
class GeneratorAction:
    """Action data for one group generator g.

    g |> h = h^{h_exp};  g |> x = alpha (1 - h) + beta x  when h_exp == 1,
    or alpha (h^{h_exp} - 1) otherwise;  g <| h = the group basis element
    right_target;  g <| x = gamma (g - right_target).
    """

    h_exp: int
    alpha: CycScalar
    beta: CycScalar | None
    right_target: int
    gamma: CycScalar


@dataclass(frozen=True)
class ActionCandidate:
    assignments: tuple[tuple[str, GeneratorAction], ...]

    def action(self, name: str) -> GeneratorAction:
        return dict(self.assignments)[name]


class SearchContext:
    """Fixed data for one search: the two algebras, the coefficient pool and
    the generator set (just d when l = 1, since c is then the identity)."""

    def __init__(self, group_spec: MetacyclicSpec, taft_spec: TaftSpec,
                 pool_order: int | None = None,
                 field: CyclotomicField | None = None):
        group_spec.validate()
        taft_spec.validate()
        if field is None:
            field = CyclotomicField(
                ambient_order(taft_spec.m, group_spec.l, group_spec.n))
        self.field = field
        self.group_spec = group_spec
        self.taft_spec = taft_spec
        self.m = taft_spec.m
        self.q_exp = taft_spec.resolved_q_exp(field)
        self.taft = build_taft(taft_spec, field)
        self.group = build_group_algebra(group_spec, field)
        if pool_order is None:
            pool_order = math.lcm(group_spec.l, group_spec.n, taft_spec.m)
        self.pool_order = pool_order
        self.roots = [r.scalar for r in field.roots_of_unity(pool_order)]
        self.pool = [field.zero] + self.roots
        gens = []
        if group_spec.l > 1:
            gens.append(("c", group_spec.l, group_index(0, 1, group_spec)))
        gens.append(("d", group_spec.n, group_index(1, 0, group_spec)))
        self.generators = gens  # (name, order, group basis index)
        self.h_idx = taft_index(1, 0, self.m)
        self.x_idx = taft_index(0, 1, self.m)
        self.taft_unit_idx = taft_index(0, 0, self.m)
        self.identity_idx = group_index(0, 0, group_spec)
        self._gen_index = {name: g for name, _, g in gens}
        self._word_elems: dict[tuple[str, ...], int] = {}

    def word_of(self, g_idx: int) -> tuple[str, ...]:
        t, i = divmod(g_idx, self.group_spec.l)
        return ("d",) * t + ("c",) * i

    def word_element(self, word: tuple[str, ...]) -> int:
        """Group basis index of the product of a generator word."""
        cached = self._word_elems.get(word)
        if cached is None:
            idx = self.identity_idx
            for name in word:
                prod = self.group.basis_product(idx, self._gen_index[name])
                (idx,) = prod  # group algebra products are monomial
            self._word_elems[word] = cached = idx
        return cached

    def generator_option_count(self, order: int) -> int:
        pool, roots = len(self.pool), len(self.roots)
        per_i1 = pool * roots          # (alpha, beta) when h_exp == 1
        per_other = pool               # alpha only
        left = per_i1 + (self.m - 1) * per_other
        right = self.group.dim * pool  # (right_target, gamma)
        return left * right

    def candidate_count(self) -> int:
        total = 1
        for _, order, _ in self.generators:
            total *= self.generator_option_count(order)
        return total

    def generator_options(self, name: str) -> Iterator[GeneratorAction]:
        for h_exp in range(self.m):
            if h_exp == 1:
                shapes = [(a, b) for a in self.pool for b in self.roots]
            else:
                shapes = [(a, None) for a in self.pool]
            for alpha, beta in shapes:
                for right_target in range(self.group.dim):
                    for gamma in self.pool:
                        yield GeneratorAction(h_exp, alpha, beta,
                                              right_target, gamma)


def enumerate_candidates(ctx: SearchContext) -> Iterator[ActionCandidate]:
    """The full candidate stream, deterministic order, no filtering."""
    names = [name for name, _, _ in ctx.generators]
    streams = [list(ctx.generator_options(name)) for name in names]
    for combo in itertools.product(*streams):
        yield ActionCandidate(tuple(zip(names, combo)))


class _UnknownGenerator(Exception):
    """Raised when an extension needs a generator the candidate leaves out
    (partial candidates during staged filtering)."""


class _ExtensionCycle(Exception):
    """Raised when the module-law recursion revisits a value it is still
    computing.  This happens for candidates with g |> h = h^i, i >= 2, whose
    generator data do not determine a well-defined action table; such
    candidates are rejected."""


class _Extender:
    """Extends a generator-level candidate to actions of arbitrary group words
    on arbitrary Taft basis monomials, using the module laws and (mp3) left to
    right.  Nothing here assumes consistency; the caller checks it."""

    def __init__(self, ctx: SearchContext, cand: ActionCandidate):
        self.ctx = ctx
        self.cand = dict(cand.assignments)
        self._left_memo: dict = {}
        self._right_memo: dict = {}
        self._active: set = set()
        f = ctx.field
        self._gen_vecs = {}
        for name, ga in self.cand.items():
            gen_idx = next(g for n, _, g in ctx.generators if n == name)
            m = ctx.m
            left_h = {taft_index(ga.h_exp % m, 0, m): f.one}
            if ga.h_exp == 1:
                left_x: Vec = {}
                add_into(left_x, taft_index(0, 0, m), ga.alpha)
                add_into(left_x, ctx.h_idx, -ga.alpha)
                add_into(left_x, ctx.x_idx, ga.beta)
            else:
                left_x = {}
                add_into(left_x, taft_index(ga.h_exp % m, 0, m), ga.alpha)
                add_into(left_x, taft_index(0, 0, m), -ga.alpha)
            right_h = {ga.right_target: f.one}
            right_x: Vec = {}
            add_into(right_x, gen_idx, ga.gamma)
            add_into(right_x, ga.right_target, -ga.gamma)
            self._gen_vecs[name] = (left_h, left_x, right_h, right_x)

    def _split(self, a_idx: int):
        i, j = divmod(a_idx, self.ctx.m)
        if i > 0:
            return "h", taft_index(i - 1, j, self.ctx.m)
        if j > 0:
            return "x", taft_index(0, j - 1, self.ctx.m)
        return None

    def _left_on_gvec(self, gvec: Vec, a_idx: int) -> Vec:
        out: Vec = {}
        for g_idx, c in gvec.items():
            for k, ck in self.left_word(self.ctx.word_of(g_idx), a_idx).items():
                add_into(out, k, c * ck)
        return out

    def _right_on_gvec(self, gvec: Vec, a_idx: int) -> Vec:
        out: Vec = {}
        for g_idx, c in gvec.items():
            for k, ck in self.right_word(self.ctx.word_of(g_idx), a_idx).items():
                add_into(out, k, c * ck)
        return out

    def _gen_left(self, name: str, a_idx: int) -> Vec:
        key = (name, a_idx)
        cached = self._left_memo.get(key)
        if cached is not None:
            return cached
        if name not in self._gen_vecs:
            raise _UnknownGenerator(name)
        if ("L", key) in self._active:
            raise _ExtensionCycle(key)
        self._active.add(("L", key))
        try:
            ctx = self.ctx
            left_h, left_x, right_h, right_x = self._gen_vecs[name]
            split = self._split(a_idx)
            if split is None:
                out = dict(ctx.taft.unit)  # g |> 1 = 1
            elif split[0] == "h":
                rest = split[1]
                out = ctx.taft.product(left_h, self._left_on_gvec(right_h, rest))
            else:
                rest = split[1]
                # Delta(x) = x (x) h + 1 (x) x
                out = ctx.taft.product(left_x, self._left_on_gvec(right_h, rest))
                for k, ck in self._left_on_gvec(right_x, rest).items():
                    add_into(out, k, ck)
        finally:
            self._active.discard(("L", key))
        self._left_memo[key] = out
        return out

    def _gen_right(self, name: str, a_idx: int) -> Vec:
        key = (name, a_idx)
        cached = self._right_memo.get(key)
        if cached is not None:
            return cached
        if name not in self._gen_vecs:
            raise _UnknownGenerator(name)
        if ("R", key) in self._active:
            raise _ExtensionCycle(key)
        self._active.add(("R", key))
        try:
            ctx = self.ctx
            left_h, left_x, right_h, right_x = self._gen_vecs[name]
            split = self._split(a_idx)
            if split is None:
                gen_idx = next(g for n, _, g in ctx.generators if n == name)
                out: Vec = {gen_idx: ctx.field.one}  # g <| 1 = g
            elif split[0] == "h":
                out = self._right_on_gvec(right_h, split[1])
            else:
                out = self._right_on_gvec(right_x, split[1])
        finally:
            self._active.discard(("R", key))
        self._right_memo[key] = out
        return out

    def left_word(self, word: tuple[str, ...], a_idx: int) -> Vec:
        if not word:
            return self.ctx.taft.basis_vec(a_idx)
        if a_idx == self.ctx.taft_unit_idx:
            # module-algebra unit law: w |> 1 = eps(w) 1 = 1 for group words;
            # re-verified on the final tables, but taking it as defining here
            # keeps single-generator prechecks conclusive.
            return dict(self.ctx.taft.unit)
        key = (word, a_idx)
        cached = self._left_memo.get(key)
        if cached is not None:
            return cached
        head, tail = word[0], word[1:]
        inner = self.left_word(tail, a_idx)
        out: Vec = {}
        for t_idx, c in inner.items():
            for k, ck in self._gen_left(head, t_idx).items():
                add_into(out, k, c * ck)
        self._left_memo[key] = out
        return out

    def right_word(self, word: tuple[str, ...], a_idx: int) -> Vec:
        ctx = self.ctx
        if not word:
            eps = ctx.taft.counit.get(a_idx)
            return {ctx.identity_idx: eps} if eps else {}
        if a_idx == ctx.taft_unit_idx:
            # module unit law: w <| 1 = w (as a group element)
            return {ctx.word_element(word): ctx.field.one}
        key = (word, a_idx)
        cached = self._right_memo.get(key)
        if cached is not None:
            return cached
        head, tail = word[0], word[1:]
        out: Vec = {}
        # (g w') <| a = sum (g <| (w' |> a1)) (w' <| a2)   [mp3, w' group-like]
        for (a1, a2), c in ctx.taft.comul.get(a_idx, {}).items():
            inner_left = self.left_word(tail, a1)
            g_part: Vec = {}
            for t_idx, ct in inner_left.items():
                for k, ck in self._gen_right(head, t_idx).items():
                    add_into(g_part, k, ct * ck)
            w_part = self.right_word(tail, a2)
            for k, ck in ctx.group.product(g_part, w_part).items():
                add_into(out, k, c * ck)
        self._right_memo[key] = out
        return out

    def full_tables(self) -> MatchedPairData:
        left = {}
        right = {}
        for g_idx in range(self.ctx.group.dim):
            word = self.ctx.word_of(g_idx)
            for a_idx in range(self.ctx.taft.dim):
                lv = self.left_word(word, a_idx)
                rv = self.right_word(word, a_idx)
                if lv:
                    left[(g_idx, a_idx)] = lv
                if rv:
                    right[(g_idx, a_idx)] = rv
        return MatchedPairData(left=left, right=right)


def _generator_precheck(ext: _Extender, name: str, order: int) -> str | None:
    """Necessary conditions checkable from one generator alone: the relation
    g^order = 1 under both actions, and (mp4)/(mp2) on the generators.
    Conditions that reach into an unassigned generator (partial candidates)
    are treated as inconclusive, so this stays a sound filter."""
    ctx = ext.ctx
    f = ctx.field
    word = (name,) * order

    def left_order(a_idx: int) -> str | None:
        if ext.left_word(word, a_idx) != ctx.taft.basis_vec(a_idx):
            return f"{name}^{order} |> violates left order relation"
        return None

    def right_order(a_idx: int) -> str | None:
        expect = {ctx.identity_idx: f.one} if a_idx == ctx.h_idx else {}
        if ext.right_word(word, a_idx) != expect:
            return f"{name}^{order} <| violates right order relation"
        return None

    def mp4_on(a_idx: int) -> str | None:
        lhs: dict = {}
        rhs: dict = {}
        for (a1, a2), c in ctx.taft.comul.get(a_idx, {}).items():
            for k1, c1 in ext._gen_right(name, a1).items():
                for k2, c2 in ext._gen_left(name, a2).items():
                    add_into(lhs, (k1, k2), c * c1 * c2)
            for k1, c1 in ext._gen_right(name, a2).items():
                for k2, c2 in ext._gen_left(name, a1).items():
                    add_into(rhs, (k1, k2), c * c1 * c2)
        if lhs != rhs:
            return f"mp4 fails on ({name}, {'h' if a_idx == ctx.h_idx else 'x'})"
        return None

    def mp2_on(a_idx: int, b_idx: int) -> str | None:
        # ties the left action to xh = qhx and x^m = 0
        prod = ctx.taft.basis_product(a_idx, b_idx)
        lhs: Vec = {}
        for t_idx, c in prod.items():
            for k, ck in ext._gen_left(name, t_idx).items():
                add_into(lhs, k, c * ck)
        rhs: Vec = {}
        for (a1, a2), c in ctx.taft.comul.get(a_idx, {}).items():
            part1 = ext._gen_left(name, a1)
            part2 = ext._left_on_gvec(ext._gen_right(name, a2), b_idx)
            for k, ck in ctx.taft.product(part1, part2).items():
                add_into(rhs, k, c * ck)
        if lhs != rhs:
            return f"mp2 fails on ({name}; generator pair)"
        return None

    checks = [lambda: left_order(ctx.h_idx), lambda: left_order(ctx.x_idx),
              lambda: right_order(ctx.h_idx), lambda: right_order(ctx.x_idx),
              lambda: mp4_on(ctx.h_idx), lambda: mp4_on(ctx.x_idx)]
    checks += [lambda a=a, b=b: mp2_on(a, b)
               for a in (ctx.h_idx, ctx.x_idx) for b in (ctx.h_idx, ctx.x_idx)]
    for check in checks:
        try:
            reason = check()
        except _UnknownGenerator:
            continue
        except _ExtensionCycle:
            return f"module-law extension does not terminate for {name}"
        if reason is not None:
            return reason
    return None


def _cross_relation_check(ext: _Extender) -> str | None:
    """Well-definedness against cd = d^k c, on both actions and both
    Taft generators."""
    ctx = ext.ctx
    if ctx.group_spec.l == 1:
        return None
    lhs_word = ("c", "d")
    rhs_word = ("d",) * ctx.group_spec.k + ("c",)
    for a_idx in (ctx.h_idx, ctx.x_idx):
        if ext.left_word(lhs_word, a_idx) != ext.left_word(rhs_word, a_idx):
            return "left action violates cd = d^k c"
        if ext.right_word(lhs_word, a_idx) != ext.right_word(rhs_word, a_idx):
            return "right action violates cd = d^k c"
    return None


def check_candidate(ctx: SearchContext,
                    cand: ActionCandidate) -> tuple[bool, str | None]:
    """Extend the candidate and check every relation and matched-pair axiom;
    failure is a value, with the first violated condition as reason."""
    ext = _Extender(ctx, cand)
    for name, order, _ in ctx.generators:
        reason = _generator_precheck(ext, name, order)
        if reason is not None:
            return False, reason
    try:
        reason = _cross_relation_check(ext)
        if reason is not None:
            return False, reason
        mp = ext.full_tables()
    except _ExtensionCycle:
        return False, "module-law extension does not terminate"
    ok, reason = verify_matched_pair(ctx.taft, ctx.group, mp)
    if not ok:
        return False, reason
    return True, None


def _project_params(ctx: SearchContext, cand: ActionCandidate) -> tuple[int, int]:
    """(beta_exp, sigma_exp) of a surviving candidate."""

    def exp_of(name: str) -> int:
        if name not in dict(cand.assignments):
            return 0
        ga = cand.action(name)
        if ga.h_exp != 1 or ga.beta is None:
            raise InvalidInput("survivor does not have the expected shape")
        e = ctx.field.exponent_of(ga.beta)
        if e is None:
            raise InvalidInput("survivor coefficient is not a root of unity")
        return e

    return exp_of("c"), exp_of("d")


@dataclass
class CensusResult:
    candidate_total: int
    generator_survivors: dict[str, int]
    survivors: list[tuple[int, int]]
    expected_count: int

    @property
    def count(self) -> int:
        return len(self.survivors)


def survivors(ctx: SearchContext,
              max_candidates: int = DEFAULT_MAX_CANDIDATES) -> list[tuple[int, int]]:
    return run_census(ctx, max_candidates).survivors


def run_census(ctx: SearchContext,
               max_candidates: int = DEFAULT_MAX_CANDIDATES) -> CensusResult:
    """Depth-first search: per-generator filtering first (each filter is a
    necessary condition of the full check), then pair relations, then the
    complete matched-pair verification through the Hopf core."""
    total = ctx.candidate_count()
    if total > max_candidates:
        raise ScaleGuardExceeded(
            f"candidate stream size {total} exceeds bound {max_candidates}; "
            "raise --max-candidates (or HOPF_MAX_CANDIDATES) to proceed")

    names = [name for name, _, _ in ctx.generators]
    orders = {name: order for name, order, _ in ctx.generators}
    per_gen: dict[str, list[GeneratorAction]] = {}
    for name in names:
        keep = []
        for ga in ctx.generator_options(name):
            cand = ActionCandidate(((name, ga),))
            ext = _Extender(ctx, cand)
            if _generator_precheck(ext, name, orders[name]) is None:
                keep.append(ga)
        per_gen[name] = keep

    found: list[tuple[int, int]] = []
    for combo in itertools.product(*(per_gen[name] for name in names)):
        cand = ActionCandidate(tuple(zip(names, combo)))
        ext = _Extender(ctx, cand)
        # Rerun the prechecks: with the full assignment they are conclusive.
        if any(_generator_precheck(ext, name, orders[name]) is not None
               for name in names):
            continue
        try:
            if _cross_relation_check(ext) is not None:
                continue
            mp = ext.full_tables()
        except _ExtensionCycle:
            continue
        ok, _ = verify_matched_pair(ctx.taft, ctx.group, mp)
        if not ok:
            continue
        # Structural sanity: every survivor's right action must be trivial.
        for (g_idx, a_idx), vec in mp.right.items():
            eps = ctx.taft.counit.get(a_idx, ctx.field.zero)
            if vec != scale({g_idx: ctx.field.one}, eps):
                raise InvalidInput("survivor with nontrivial right action")
        params = _project_params(ctx, cand)
        if params not in found:
            found.append(params)

    g = ctx.group_spec
    expected = g.l * math.gcd(g.n, g.k - 1)
    return CensusResult(
        candidate_total=total,
        generator_survivors={name: len(per_gen[name]) for name in names},
        survivors=sorted(found),
        expected_count=expected,
    )
