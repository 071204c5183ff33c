"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements live in Q[x]/(Phi_N(x)) and are stored as coefficient vectors of
length phi(N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.  Rationals are
gmpy2.mpq, so everything is exact; there is no floating point anywhere.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import InvalidInput, MalformedInput

Q0 = mpq(0)
Q1 = mpq(1)


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [Q0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_sub(a: Sequence, b: Sequence) -> list:
    out = [Q0] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _poly_trim(out)


def _poly_divmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    num = list(num)
    den = _poly_trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Q0] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        coef = num[k + len(den) - 1] / lead
        if coef == 0:
            continue
        quot[k] = coef
        for j, dj in enumerate(den):
            num[k + j] -= coef * dj
    return quot, _poly_trim(num)


@functools.cache
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients of Phi_n, computed by exact division of x^n - 1."""
    if n < 1:
        raise InvalidInput(f"cyclotomic index must be positive, got {n}")
    num = [Q0] * (n + 1)
    num[0], num[n] = mpq(-1), Q1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(num)


class CyclotomicField:
    """Context for Q(zeta_N): holds Phi_N and the reduction tables.

    Immutable after construction; safe to share across workers.
    """

    def __init__(self, n: int):
        if n < 1:
            raise InvalidInput(f"field order must be positive, got {n}")
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1  # phi(N)
        # x^k mod Phi_N for k in [degree, 2*degree - 2], used by mul().
        self._reduction: list[tuple] = []
        row = [-c for c in self.modulus[:-1]]
        for _ in range(self.degree - 1):
            self._reduction.append(tuple(row))
            top = row[-1]
            row = [Q0] + row[:-1]
            if top != 0:
                for i in range(self.degree):
                    row[i] -= top * self.modulus[i]
        self.zero = CycScalar(self, (Q0,) * self.degree)
        self.one = self.from_rational(1)
        self._zeta_pow = [self._reduce_power(e) for e in range(n)]

    def _reduce_power(self, e: int) -> "CycScalar":
        coeffs = [Q0] * self.degree
        if e < self.degree:
            coeffs[e] = Q1
            return CycScalar(self, tuple(coeffs))
        p = [Q0] * (e + 1)
        p[e] = Q1
        _, rem = _poly_divmod(p, self.modulus)
        rem += [Q0] * (self.degree - len(rem))
        return CycScalar(self, tuple(rem))

    def __repr__(self):
        return f"CyclotomicField({self.n})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and self.n == other.n

    def __hash__(self):
        return hash(("CyclotomicField", self.n))

    def scalar(self, coeffs: Iterable) -> "CycScalar":
        coeffs = tuple(mpq(c) for c in coeffs)
        if len(coeffs) != self.degree:
            raise MalformedInput(
                f"expected {self.degree} coefficients, got {len(coeffs)}"
            )
        return CycScalar(self, coeffs)

    def from_rational(self, r) -> "CycScalar":
        coeffs = [Q0] * self.degree
        coeffs[0] = mpq(r)
        return CycScalar(self, tuple(coeffs))

    def zeta(self, exponent: int = 1) -> "CycScalar":
        return self._zeta_pow[exponent % self.n]

    def root(self, exponent: int = 1) -> "RootOfUnity":
        return RootOfUnity(self, exponent % self.n)

    def roots_of_unity(self, d: int) -> list["RootOfUnity"]:
        """The subgroup U_d(K) = {z : z^d = 1}, of size gcd(d, N)."""
        if d < 1:
            raise InvalidInput(f"root order must be positive, got {d}")
        g = math.gcd(d, self.n)
        step = self.n // g
        return [RootOfUnity(self, j * step) for j in range(g)]

    def exponent_of(self, value: "CycScalar") -> int | None:
        """Inverse of zeta(): the e with value == zeta^e, or None."""
        for e in range(self.n):
            if self._zeta_pow[e] == value:
                return e
        return None


make_field = CyclotomicField


class CycScalar:
    """An element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def __repr__(self):
        return f"CycScalar(N={self.field.n}, {list(map(str, self.coeffs))})"

    def __bool__(self):
        return any(c != 0 for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.field.n == other.field.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.n, self.coeffs))

    def _check(self, other: "CycScalar"):
        if self.field.n != other.field.n:
            raise MalformedInput("scalars from different fields")

    def __add__(self, other):
        self._check(other)
        return CycScalar(
            self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        return CycScalar(
            self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return CycScalar(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        deg = self.field.degree
        conv = [Q0] * (2 * deg - 1)
        for i, ai in enumerate(self.coeffs):
            if ai == 0:
                continue
            for j, bj in enumerate(other.coeffs):
                if bj != 0:
                    conv[i + j] += ai * bj
        out = conv[:deg]
        for k in range(deg, 2 * deg - 1):
            ck = conv[k]
            if ck != 0:
                row = self.field._reduction[k - deg]
                for i in range(deg):
                    out[i] += ck * row[i]
        return CycScalar(self.field, tuple(out))

    def inverse(self) -> "CycScalar":
        if not self:
            raise ZeroDivisionError("inversion of zero in cyclotomic field")
        # Extended Euclid on (self, Phi_N) over Q[x].
        a = _poly_trim(list(self.coeffs))
        b = list(self.field.modulus)
        s0, s1 = [Q1], []
        while b:
            q, r = _poly_divmod(a, b)
            a, b = b, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # gcd with the irreducible Phi_N is a nonzero constant.
        assert len(a) == 1
        inv_lead = Q1 / a[0]
        coeffs = [c * inv_lead for c in s0]
        _, rem = _poly_divmod(coeffs, self.field.modulus)
        rem += [Q0] * (self.field.degree - len(rem))
        return CycScalar(self.field, tuple(rem[: self.field.degree]))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, field: CyclotomicField, data: list[str]) -> "CycScalar":
        return field.scalar([mpq(s) for s in data])


@dataclass(frozen=True)
class RootOfUnity:
    """zeta^exponent as a group element; multiplication adds exponents mod N."""

    field: CyclotomicField
    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % self.field.n)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if self.field.n != other.field.n:
            raise MalformedInput("roots from different fields")
        return RootOfUnity(self.field, self.exponent + other.exponent)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.field, self.exponent * k)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.field, -self.exponent)

    @property
    def order(self) -> int:
        return self.field.n // math.gcd(self.exponent, self.field.n)

    @property
    def scalar(self) -> CycScalar:
        return self.field.zeta(self.exponent)


def order_of(r: RootOfUnity) -> int:
    return r.order


def ambient_order(m: int, l: int = 2, n: int = 1) -> int:
    """Field order N = lcm(2, m, l, n): large enough that |U_m| = m, |U_l| = l
    and |U_{(n,k-1)}| = (n,k-1), and even so odd-N subtleties never arise."""
    return math.lcm(2, m, l, n)
