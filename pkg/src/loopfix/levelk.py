"""Level-k data: the forms B_k, level-k weights, #T_k and the elements t_lambda."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from .rootsys import RootSystem, RootSystemError, frac_matvec, pairing

Weight = tuple  # integer (or half-integer Fraction) coordinates, fundamental-weight basis
Coweight = tuple  # rational coordinates, simple-coroot basis


class LevelError(RootSystemError):
    pass


class IrregularElementError(ValueError):
    pass


def as_level(rs: RootSystem, k) -> tuple[int, ...]:
    if isinstance(k, int):
        k = (k,) * rs.n_factors
    return rs._check_level(k)


def shifted_level(rs: RootSystem, k) -> tuple[int, ...]:
    """k + c, factor by factor."""
    return tuple(kj + cj for kj, cj in zip(as_level(rs, k), rs.dual_coxeter))


def b_flat(rs: RootSystem, k, xi: Sequence) -> Weight:
    """B_k^flat: coweight -> weight."""
    k = rs._check_level((k,) * rs.n_factors if isinstance(k, int) else k, allow_zero=True)
    if len(xi) != rs.rank:
        raise RootSystemError(f"dimension mismatch: {len(xi)} vs rank {rs.rank}")
    g = rs.gram(k)
    return tuple(sum((int(g[i, j]) * Fraction(xi[j]) for j in range(rs.rank)), Fraction(0))
                 for i in range(rs.rank))


def b_sharp(rs: RootSystem, k, mu: Sequence) -> Coweight:
    """B_k^sharp = (B_k^flat)^(-1): weight -> coweight.  Needs every k_j != 0."""
    k = tuple(k) if not isinstance(k, int) else (k,) * rs.n_factors
    if any(kj == 0 for kj in k):
        raise LevelError(f"B_k is singular for level {k}")
    if len(mu) != rs.rank:
        raise RootSystemError(f"dimension mismatch: {len(mu)} vs rank {rs.rank}")
    return frac_matvec(rs.gram_inverse(k), mu)


def torus_group_order(rs: RootSystem, k) -> int:
    """#T_k = [B_k^sharp(weight lattice) : coroot lattice] = |det Gram(B_k)|."""
    g = rs.gram(as_level(rs, k))
    return abs(int(sympy.Matrix(g.tolist()).det()))


def level_weights(rs: RootSystem, k) -> list[Weight]:
    """All dominant weights lambda with <lambda, h_alpha0> <= k_j on every factor."""
    k = as_level(rs, k)
    per_factor = []
    for j, sl in enumerate(rs.slices):
        comarks = rs.highest_coroots[j][sl]
        ranges = [range(k[j] // m + 1) for m in comarks]
        ws = [c for c in itertools.product(*ranges) if sum(a * m for a, m in zip(c, comarks)) <= k[j]]
        per_factor.append(ws)
    return [tuple(x for part in combo for x in part) for combo in itertools.product(*per_factor)]


def is_level_weight(rs: RootSystem, k, mu: Sequence) -> bool:
    k = as_level(rs, k)
    if len(mu) != rs.rank or any(Fraction(x).denominator != 1 or x < 0 for x in mu):
        return False
    return all(pairing(mu, rs.highest_coroots[j]) <= k[j] for j in range(rs.n_factors))


@dataclass(frozen=True)
class TorusElement:
    """t = exp(v) for a rational coweight v (simple-coroot coordinates)."""

    v: tuple

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(Fraction(x) for x in self.v))

    @property
    def order(self) -> int:
        """Smallest N with t^mu an N-th root of unity for every integral weight mu."""
        return math.lcm(*(x.denominator for x in self.v)) if self.v else 1

    def exponent(self, mu: Sequence) -> Fraction:
        """<mu, v>, so that t^mu = exp(2 pi i <mu, v>)."""
        return pairing(mu, self.v)

    def weyl_act(self, w) -> "TorusElement":
        """The conjugate w t w^{-1}, i.e. v -> w v."""
        return TorusElement(w.act_coweight(self.v))

    def same_point(self, other: "TorusElement") -> bool:
        """Equality in T, i.e. v - v' in the coroot lattice."""
        return all((a - b).denominator == 1 for a, b in zip(self.v, other.v))


def is_regular(rs: RootSystem, t: TorusElement) -> bool:
    """True iff <alpha, v> is not an integer for every root alpha."""
    return all(t.exponent(a).denominator != 1 for a in rs.positive_roots)


def t_lambda(rs: RootSystem, k, lam: Sequence[int]) -> TorusElement:
    """t_lambda = exp(B_{k+c}^sharp(lambda + rho))."""
    k = as_level(rs, k)
    lam = tuple(lam)
    if not is_level_weight(rs, k, lam):
        raise LevelError(f"{lam} is not a weight at level {k}")
    shifted = tuple(a + b for a, b in zip(lam, rs.rho))
    t = TorusElement(b_sharp(rs, shifted_level(rs, k), shifted))
    if not is_regular(rs, t):
        raise AssertionError(f"t_lambda for {lam} is not regular")
    return t


def field_order(rs: RootSystem, k) -> int:
    """A common cyclotomic order for every character value at every t_lambda."""
    return math.lcm(*(t_lambda(rs, k, lam).order for lam in level_weights(rs, k)))
