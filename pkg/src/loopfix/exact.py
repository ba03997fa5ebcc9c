"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element of Q(zeta_N) is stored as its residue modulo the N-th cyclotomic
polynomial, i.e. as a rational coefficient vector in the power basis
1, zeta, ..., zeta^(phi(N)-1).  That residue is unique, so equality is plain
coefficient comparison.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class NotRationalError(ValueError):
    """Raised when a cyclotomic value was expected to be rational but is not."""

    def __init__(self, value: "Cyclotomic"):
        self.value = value
        self.approx = value.to_complex()
        super().__init__(f"value {value!r} is not rational (approx {self.approx:.12g})")


# ---------------------------------------------------------------------------
# dense polynomials over Q, lowest degree first

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: Sequence[Rational], den: Sequence[Rational]) -> tuple[list, list]:
    num = list(num)
    den = _trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    q = [0] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c == 0:
            continue
        c = Fraction(c) / lead if lead != 1 else c
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    return _trim(q), _trim(num[: len(den) - 1])


def _poly_mul(a: Sequence[Rational], b: Sequence[Rational]) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: Sequence[Rational], b: Sequence[Rational]) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Obtained by dividing x^n - 1 by Phi_d for every proper divisor d of n.
    """
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    p: list = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, r = _poly_divmod(p, cyclotomic_polynomial(d))
            assert not r
    return tuple(int(c) for c in p)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Rational, ...], ...]:
    """Row j holds the reduction of x^j modulo Phi_n, for 0 <= j < n."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows = []
    cur = [0] * d
    if d:
        cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x and reduce: x^d = -(phi_0 + ... + phi_{d-1} x^{d-1})
        top = cur[-1] if d else 0
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _norm(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Cyclotomic:
    """An element of Q(zeta_N), zeta_N = exp(2 pi i / N)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Rational]):
        coeffs = tuple(_norm(c) for c in coeffs)
        d = _degree(order)
        if len(coeffs) != d:
            raise ValueError(f"Q(zeta_{order}) elements need {d} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------------
    @classmethod
    def rational(cls, q: Rational, order: int = 1) -> "Cyclotomic":
        d = _degree(order)
        return cls(order, (q,) + (0,) * (d - 1))

    @classmethod
    def zero(cls, order: int = 1) -> "Cyclotomic":
        return cls(order, (0,) * _degree(order))

    @classmethod
    def one(cls, order: int = 1) -> "Cyclotomic":
        return cls.rational(1, order)

    @classmethod
    def _from_cyclic(cls, order: int, cyc: Sequence[Rational]) -> "Cyclotomic":
        """Reduce sum_j cyc[j] x^j (j < order) modulo Phi_order."""
        table = _power_table(order)
        d = _degree(order)
        out = [0] * d
        for j, c in enumerate(cyc):
            if c == 0:
                continue
            row = table[j]
            if j < d:
                out[j] += c
            else:
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return cls(order, out)

    # -- field plumbing -----------------------------------------------------
    def promote(self, order: int) -> "Cyclotomic":
        """Embed into Q(zeta_order); ``order`` must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed Q(zeta_{self.order}) into Q(zeta_{order})")
        step = order // self.order
        cyc = [0] * order
        for i, c in enumerate(self.coeffs):
            cyc[i * step] = c
        return Cyclotomic._from_cyclic(order, cyc)

    def _common(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        if not isinstance(other, Cyclotomic):
            if isinstance(other, (int, Fraction)):
                return self, Cyclotomic.rational(other, self.order)
            return NotImplemented, NotImplemented
        if other.order == self.order:
            return self, other
        n = math.lcm(self.order, other.order)
        return self.promote(n), other.promote(n)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyclotomic(a.order, (x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, (-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyclotomic(a.order, (x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, (x * other for x in self.coeffs))
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        n = a.order
        cyc = [0] * n
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    cyc[(i + j) % n] += x * y
        return Cyclotomic._from_cyclic(n, cyc)

    __rmul__ = __mul__

    def inv(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        phi = list(cyclotomic_polynomial(self.order))
        # invariant: r_i = s_i * self (mod phi)
        r0, s0 = phi, []
        r1, s1 = _trim(list(self.coeffs)), [1]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = Fraction(r1[0])
        inv = [x / c for x in s1]
        cyc = [0] * self.order
        # s1 has degree < deg phi <= order
        for i, x in enumerate(inv):
            cyc[i] += x
        return Cyclotomic._from_cyclic(self.order, cyc)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(self.order, (Fraction(x) / other for x in self.coeffs))
        a, b = self._common(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = Cyclotomic.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> "Cyclotomic":
        """Complex conjugate: zeta -> zeta^(N-1)."""
        n = self.order
        cyc = [0] * n
        for i, c in enumerate(self.coeffs):
            cyc[(-i) % n] += c
        return Cyclotomic._from_cyclic(n, cyc)

    # -- comparison / export ------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    # values compare across different orders, so no hash consistent with == is cheap
    __hash__ = None

    def to_rational(self) -> Fraction:
        if any(self.coeffs[1:]):
            raise NotRationalError(self)
        return Fraction(self.coeffs[0]) if self.coeffs else Fraction(0)

    def to_integer(self) -> int:
        q = self.to_rational()
        if q.denominator != 1:
            raise NotRationalError(self)
        return q.numerator

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.order)
        return sum((float(c) * z**i for i, c in enumerate(self.coeffs) if c), 0j)

    def to_json(self) -> dict:
        fr = [Fraction(c) for c in self.coeffs]
        return {"N": self.order, "coeffs": [[f.numerator, f.denominator] for f in fr]}

    @classmethod
    def from_json(cls, obj: dict) -> "Cyclotomic":
        return cls(int(obj["N"]), (Fraction(int(p), int(q)) for p, q in obj["coeffs"]))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            terms.append(f"{c}" if not mono else (mono if c == 1 else f"({c})*{mono}"))
        body = " + ".join(terms) if terms else "0"
        return f"Cyclotomic[{self.order}]({body})"

    @staticmethod
    def root_of_unity(n: int, k: int) -> "Cyclotomic":
        return root_of_unity(n, k)


def root_of_unity(n: int, k: int) -> Cyclotomic:
    """exp(2 pi i k / n) as an element of Q(zeta_n)."""
    if n < 1:
        raise ValueError("order must be positive")
    return Cyclotomic(n, _power_table(n)[k % n])


def exp2pi(q: Rational, order: int | None = None) -> Cyclotomic:
    """exp(2 pi i q) for rational q, optionally placed in Q(zeta_order)."""
    q = Fraction(q)
    n = q.denominator
    if order is not None:
        if order % n:
            order = math.lcm(order, n)
        return root_of_unity(order, q.numerator * (order // n))
    return root_of_unity(n, q.numerator)
