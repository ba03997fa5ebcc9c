"""Root data for simply connected compact groups given as products of simple types.

Coordinates: weights are written in the basis of fundamental weights (Dynkin
labels) and elements of the Cartan subalgebra ("coweights") in the basis of
simple coroots.  The two bases are dual, so the pairing <mu, xi> is the plain
dot product.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np
import sympy

DEFAULT_WEYL_CAP = 10**6


class RootSystemError(ValueError):
    pass


class WeylCapExceeded(RootSystemError):
    pass


_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        if f not in "ABCDEFG" or len(f) != 1:
            raise RootSystemError(f"unknown Dynkin family {f!r}")
        if not isinstance(r, int) or r < 1:
            raise RootSystemError(f"rank must be a positive integer, got {r!r}")
        ok = {
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }.get(f, r >= _MIN_RANK.get(f, 1))
        if not ok:
            raise RootSystemError(f"{f}{r} is not a valid Dynkin type")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def weyl_order(self) -> int:
        f, n = self.family, self.rank
        if f == "A":
            return math.factorial(n + 1)
        if f in "BC":
            return 2**n * math.factorial(n)
        if f == "D":
            return 2 ** (n - 1) * math.factorial(n)
        return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                ("F", 4): 1152, ("G", 2): 12}[(f, n)]


def cartan_matrix(st: SimpleType) -> np.ndarray:
    """Cartan matrix a_ij = <alpha_i^vee, alpha_j> in Bourbaki labelling."""
    n = st.rank
    a = 2 * np.eye(n, dtype=np.int64)
    f = st.family

    def link(i, j, aij=-1, aji=-1):
        a[i, j], a[j, i] = aij, aji

    if f in "ABCD":
        for i in range(n - 1):
            link(i, i + 1)
        if f == "B":
            # alpha_n short
            link(n - 2, n - 1, -1, -2)
        elif f == "C":
            # alpha_n long
            link(n - 2, n - 1, -2, -1)
        elif f == "D":
            a[n - 2, n - 1] = a[n - 1, n - 2] = 0
            link(n - 3, n - 1)
    elif f == "E":
        # 1-3-4-5-6(-7-8), node 2 attached to 4
        a[:] = 2 * np.eye(n, dtype=np.int64)
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif f == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif f == "G":
        # alpha_1 short, alpha_2 long
        link(0, 1, -3, -1)
    return a


def parse_group(spec: str) -> list[SimpleType]:
    """Parse a group specifier such as ``"A1"``, ``"A1xA1"`` or ``"A2,G2"``."""
    tokens = [t for t in re.split(r"[x,\s]+", spec.strip()) if t]
    if not tokens:
        raise RootSystemError(f"empty group specifier {spec!r}")
    out = []
    for t in tokens:
        m = re.fullmatch(r"([A-Ga-g])(\d+)", t)
        if not m:
            raise RootSystemError(f"cannot parse group token {t!r}")
        out.append(SimpleType(m.group(1).upper(), int(m.group(2))))
    return out


def _rational_inverse(m) -> list[list[Fraction]]:
    inv = sympy.Matrix(m).inv()
    return [[Fraction(int(x.p), int(x.q)) for x in inv.row(i)] for i in range(inv.rows)]


def frac_matvec(m, v) -> tuple[Fraction, ...]:
    """Exact matrix-vector product for rational (or integer) entries."""
    return tuple(sum((Fraction(x) * y for x, y in zip(row, v)), Fraction(0)) for row in m)


def pairing(mu: Sequence, xi: Sequence) -> Fraction:
    """<mu, xi> for mu in weight coordinates and xi in coroot coordinates."""
    if len(mu) != len(xi):
        raise RootSystemError(f"dimension mismatch: {len(mu)} vs {len(xi)}")
    return sum((Fraction(a) * b for a, b in zip(mu, xi)), Fraction(0))


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of the finite Weyl group.

    ``matrix`` acts on weight coordinates, ``comatrix`` on coroot coordinates;
    ``comatrix`` is the inverse transpose of ``matrix`` so the pairing is preserved.
    """

    word: tuple[int, ...]
    matrix: np.ndarray
    comatrix: np.ndarray

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    @cached_property
    def key(self) -> bytes:
        return self.matrix.tobytes()

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"WeylElement(word={self.word})"

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.word + other.word, self.matrix @ other.matrix,
                           self.comatrix @ other.comatrix)

    def inverse(self) -> "WeylElement":
        return WeylElement(tuple(reversed(self.word)), self.comatrix.T.copy(), self.matrix.T.copy())

    def act_weight(self, mu: Sequence) -> tuple:
        return _matvec(self.matrix, mu)

    def act_coweight(self, xi: Sequence) -> tuple:
        return _matvec(self.comatrix, xi)


def _matvec(m: np.ndarray, v: Sequence) -> tuple:
    if m.shape[1] != len(v):
        raise RootSystemError(f"dimension mismatch: matrix {m.shape} vs vector of length {len(v)}")
    return tuple(sum((int(m[i, j]) * v[j] for j in range(len(v)) if m[i, j]), 0) for i in range(m.shape[0]))


def act(w: WeylElement, x: Sequence, side: str = "weight") -> tuple:
    """Apply ``w`` to a weight (``side="weight"``) or coweight (``side="coweight"``)."""
    if side == "weight":
        return w.act_weight(x)
    if side == "coweight":
        return w.act_coweight(x)
    raise ValueError(f"unknown side {side!r}")


class RootSystem:
    """Roots, coroots, rho, highest roots, dual Coxeter numbers and basic forms.

    Everything is computed once at construction; instances are never mutated
    afterwards (the Weyl group is materialized lazily but deterministically).
    """

    def __init__(self, factors: Sequence[SimpleType], weyl_cap: int = DEFAULT_WEYL_CAP):
        self.factors = tuple(factors)
        if not self.factors:
            raise RootSystemError("need at least one simple factor")
        self.weyl_cap = weyl_cap
        self.weyl_order = math.prod(f.weyl_order for f in self.factors)
        if self.weyl_order > weyl_cap:
            raise WeylCapExceeded(
                f"Weyl group of {self.name} has order {self.weyl_order} > cap {weyl_cap}")

        ranks = [f.rank for f in self.factors]
        self.rank = sum(ranks)
        self.offsets = tuple(int(x) for x in np.cumsum([0] + ranks[:-1]))
        self.slices = tuple(slice(o, o + r) for o, r in zip(self.offsets, ranks))
        n = self.rank
        self.cartan = np.zeros((n, n), dtype=np.int64)
        for f, sl in zip(self.factors, self.slices):
            self.cartan[sl, sl] = cartan_matrix(f)
        self.factor_of = tuple(j for j, r in enumerate(ranks) for _ in range(r))

        self._build_lengths()
        self._build_roots()
        self._build_forms()

    # -- construction -------------------------------------------------------
    def _build_lengths(self):
        a = self.cartan
        n = self.rank
        lengths: list = [None] * n
        for sl in self.slices:
            idx = list(range(sl.start, sl.stop))
            lengths[idx[0]] = Fraction(1)
            stack = [idx[0]]
            while stack:
                i = stack.pop()
                for j in idx:
                    if lengths[j] is None and a[i, j] != 0:
                        # a_ij |alpha_i|^2 = a_ji |alpha_j|^2
                        lengths[j] = lengths[i] * int(a[i, j]) / int(a[j, i])
                        stack.append(j)
            top = max(lengths[i] for i in idx)
            for i in idx:
                lengths[i] = lengths[i] * 2 / top
        # squared lengths of simple roots, long roots normalized to 2
        self.simple_lengths = tuple(lengths)

    def _build_roots(self):
        a = self.cartan
        n = self.rank
        seen = {}
        frontier = []
        for i in range(n):
            c = tuple(int(i == j) for j in range(n))
            seen[c] = None
            frontier.append(c)
        while frontier:
            new = []
            for c in frontier:
                for i in range(n):
                    # s_i acts on simple-root coordinates
                    p = sum(int(a[i, j]) * c[j] for j in range(n))
                    if p == 0:
                        continue
                    d = list(c)
                    d[i] -= p
                    d = tuple(d)
                    if d not in seen:
                        seen[d] = None
                        new.append(d)
            frontier = new
        pos = [c for c in seen if all(x >= 0 for x in c)]
        pos.sort(key=lambda c: (sum(c), c))
        neg = [tuple(-x for x in c) for c in pos]
        self.positive_root_coords = tuple(pos)
        self.root_coords = tuple(pos + neg)
        self.roots = tuple(tuple(int(x) for x in a @ np.array(c, dtype=np.int64)) for c in self.root_coords)
        self.positive_roots = self.roots[: len(pos)]
        self.root_index = {r: i for i, r in enumerate(self.roots)}

        def norm2(c):
            # (alpha, alpha) for alpha = sum c_j alpha_j; (alpha_i, alpha_j) = a_ij |alpha_i|^2 / 2
            return sum(Fraction(c[i]) * c[j] * int(a[i, j]) * self.simple_lengths[i] / 2
                       for i in range(n) for j in range(n) if c[i] and c[j])

        cor = []
        for c in self.root_coords:
            l2 = norm2(c)
            v = tuple(Fraction(c[j]) * self.simple_lengths[j] / l2 for j in range(n))
            assert all(x.denominator == 1 for x in v)
            cor.append(tuple(int(x) for x in v))
        self.coroots = tuple(cor)

        self.rho = tuple([1] * n)
        hi, hico, cox = [], [], []
        for j, sl in enumerate(self.slices):
            cand = [i for i, c in enumerate(self.positive_root_coords)
                    if any(c[sl]) and not any(c[: sl.start]) and not any(c[sl.stop:])]
            best = max(cand, key=lambda i: sum(self.positive_root_coords[i]))
            hi.append(self.positive_roots[best])
            hico.append(self.coroots[best])
            cox.append(1 + sum(self.coroots[best]))
        self.highest_roots = tuple(hi)
        self.highest_coroots = tuple(hico)
        self.dual_coxeter = tuple(cox)

    def _build_forms(self):
        a = self.cartan
        n = self.rank
        gram = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if a[i, j]:
                    gram[i][j] = Fraction(2 * int(a[i, j])) / self.simple_lengths[j]
        # normalize per factor so that B(h_alpha0, h_alpha0) = 2
        for f, sl in enumerate(self.slices):
            h = self.highest_coroots[f]
            val = sum(gram[i][j] * h[i] * h[j] for i in range(sl.start, sl.stop) for j in range(sl.start, sl.stop))
            scale = Fraction(2) / val
            for i in range(sl.start, sl.stop):
                for j in range(sl.start, sl.stop):
                    gram[i][j] *= scale
        assert all(x.denominator == 1 for row in gram for x in row)
        self.basic_gram = np.array([[int(x) for x in row] for row in gram], dtype=np.int64)

    # -- basic derived data -------------------------------------------------
    @property
    def name(self) -> str:
        return "x".join(str(f) for f in self.factors)

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    @property
    def n_factors(self) -> int:
        return len(self.factors)

    def simple_root(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.cartan[:, i])

    def factor_slice(self, j: int) -> slice:
        return self.slices[j]

    def gram(self, level: Sequence[int]) -> np.ndarray:
        """Gram matrix of B_k on the coroot basis."""
        level = self._check_level(level, allow_zero=True)
        g = self.basic_gram.copy()
        for kj, sl in zip(level, self.slices):
            g[sl, :] *= kj
        return g

    def gram_inverse(self, level: Sequence[int]) -> list[list[Fraction]]:
        level = self._check_level(level)
        inv = [[Fraction(0)] * self.rank for _ in range(self.rank)]
        for kj, sl, base in zip(level, self.slices, self._basic_gram_inverses):
            for i in range(sl.stop - sl.start):
                for j in range(sl.stop - sl.start):
                    inv[sl.start + i][sl.start + j] = base[i][j] / kj
        return inv

    @cached_property
    def _basic_gram_inverses(self):
        return [_rational_inverse(self.basic_gram[sl, sl].tolist()) for sl in self.slices]

    def _check_level(self, level, allow_zero=False) -> tuple:
        level = tuple(level)
        if len(level) != self.n_factors:
            raise RootSystemError(f"level needs {self.n_factors} entries, got {len(level)}")
        for k in level:
            if k != int(k) or (k < 0) or (k == 0 and not allow_zero):
                raise RootSystemError(f"level entries must be positive integers, got {level}")
        return tuple(int(k) for k in level)

    def height(self, mu: Sequence) -> Fraction:
        """<mu, rho_vee> with rho_vee the sum of fundamental coweights."""
        return sum((Fraction(x) for x in mu), Fraction(0))

    def is_positive_root(self, alpha: Sequence) -> bool:
        return tuple(alpha) in self.root_index and self.root_index[tuple(alpha)] < len(self.positive_roots)

    def highest_root_pairing(self, mu: Sequence, j: int) -> Fraction:
        return pairing(mu, self.highest_coroots[j])

    # -- Weyl group ---------------------------------------------------------
    @cached_property
    def simple_reflections(self) -> tuple[WeylElement, ...]:
        n = self.rank
        out = []
        for i in range(n):
            m = np.eye(n, dtype=np.int64)
            m[:, i] -= self.cartan[:, i]
            out.append(WeylElement((i,), m, m.T.copy()))
        return tuple(out)

    @cached_property
    def weyl_group(self) -> tuple[WeylElement, ...]:
        return tuple(enumerate_weyl(self))

    @cached_property
    def identity(self) -> WeylElement:
        n = self.rank
        return WeylElement((), np.eye(n, dtype=np.int64), np.eye(n, dtype=np.int64))

    @cached_property
    def longest_element(self) -> WeylElement:
        return max(self.weyl_group, key=lambda w: w.length)

    def conjugate_weight(self, mu: Sequence[int]) -> tuple[int, ...]:
        """mu* = -w0 mu, the highest weight of the dual representation."""
        return tuple(-x for x in self.longest_element.act_weight(mu))

    def reflection_for_root(self, alpha: Sequence[int]) -> WeylElement:
        """The Weyl element s_alpha (found in the enumerated group)."""
        idx = self.root_index[tuple(alpha)]
        cor = self.coroots[idx]
        n = self.rank
        m = np.eye(n, dtype=np.int64) - np.outer(np.array(alpha), np.array(cor))
        for w in self.weyl_group:
            if np.array_equal(w.matrix, m):
                return w
        raise AssertionError("reflection not found")


def enumerate_weyl(rs: RootSystem, cap: int | None = None) -> list[WeylElement]:
    """Breadth-first closure of the identity under left multiplication by simple reflections.

    Words are reduced because each element is first reached at its minimal depth.
    """
    cap = rs.weyl_cap if cap is None else cap
    if rs.weyl_order > cap:
        raise WeylCapExceeded(f"Weyl group order {rs.weyl_order} exceeds cap {cap}")
    gens = rs.simple_reflections
    found = {rs.identity.key: rs.identity}
    order = [rs.identity]
    frontier = [rs.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                u = s * w
                if u.key not in found:
                    if len(found) >= cap:
                        raise WeylCapExceeded(f"Weyl group exceeds cap {cap}")
                    found[u.key] = u
                    order.append(u)
                    nxt.append(u)
        frontier = nxt
    return order


def build_root_system(spec: str | Sequence, weyl_cap: int = DEFAULT_WEYL_CAP) -> RootSystem:
    """Build a root system from ``"A1xA2"`` or a list of ``(family, rank)`` pairs."""
    if isinstance(spec, str):
        factors = parse_group(spec)
    else:
        factors = [s if isinstance(s, SimpleType) else SimpleType(str(s[0]).upper(), int(s[1])) for s in spec]
    return RootSystem(factors, weyl_cap=weyl_cap)
