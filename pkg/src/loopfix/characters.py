"""Exact evaluation of characters and determinant factors at torsion points of T.

All values are elements of a cyclotomic field.  Characters are only ever
evaluated pointwise; no weight-multiplicity expansion is performed.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .alcove import AffineWeylElement, FaceData, affine_length, canonical_coweight
from .exact import Cyclotomic, exp2pi
from .levelk import (IrregularElementError, LevelError, TorusElement, as_level, level_weights,
                     shifted_level, t_lambda, torus_group_order)
from .rootsys import RootSystem, pairing


def weight_monomial(t: TorusElement, mu: Sequence) -> Cyclotomic:
    """t^mu = exp(2 pi i <mu, v>)."""
    return exp2pi(t.exponent(mu), t.order)


def _zero(t: TorusElement) -> Cyclotomic:
    return Cyclotomic.zero(t.order)


def weyl_numerator(rs: RootSystem, t: TorusElement, mu: Sequence) -> Cyclotomic:
    """sum_w (-1)^l(w) t^{w mu}."""
    total = _zero(t)
    for w in rs.weyl_group:
        term = weight_monomial(t, w.act_weight(mu))
        total = total + term if w.sign > 0 else total - term
    return total


def weyl_denominator(rs: RootSystem, t: TorusElement) -> Cyclotomic:
    """J(t) = sum_w (-1)^l(w) t^{w rho}."""
    return weyl_numerator(rs, t, rs.rho)


def denominator_norm_sq(rs: RootSystem, t: TorusElement) -> Cyclotomic:
    """|J(t)|^2 = J(t) * conj(J(t))."""
    j = weyl_denominator(rs, t)
    return j * j.conj()


def denominator_product(rs: RootSystem, t: TorusElement) -> Cyclotomic:
    """prod over all roots of (1 - t^alpha); equals |J(t)|^2."""
    out = Cyclotomic.one(t.order)
    for a in rs.roots:
        out = out * (1 - weight_monomial(t, a))
    return out


def weyl_character(rs: RootSystem, mu: Sequence[int], t: TorusElement) -> Cyclotomic:
    """chi_mu(t) by the Weyl character formula; t must be regular."""
    den = weyl_denominator(rs, t)
    if den.is_zero():
        raise IrregularElementError(f"Weyl denominator vanishes at v={t.v}")
    shifted = tuple(a + b for a, b in zip(mu, rs.rho))
    return weyl_numerator(rs, t, shifted) / den


# ---------------------------------------------------------------------------
# determinant factors for torus actions on complex vector spaces

def dc_complex(weights: Iterable[Sequence], t: TorusElement) -> Cyclotomic:
    """D_C = prod_beta (1 - t^{-beta}) for the complex weights beta of the action."""
    out = Cyclotomic.one(t.order)
    for b in weights:
        out = out * (1 - weight_monomial(t, tuple(-x for x in b)))
    return out


def _frac_part(q: Fraction) -> Fraction:
    return q - math.floor(q)


def sqrt_det(weights: Iterable[Sequence], t: TorusElement) -> Cyclotomic:
    """det of the principal square root of the action (eigenvalue arguments halved into [0, pi))."""
    order = 2 * t.order
    out = Cyclotomic.one(order)
    for b in weights:
        out = out * exp2pi(_frac_part(t.exponent(b)) / 2, order)
    return out


def dr_real(weights: Sequence[Sequence], t: TorusElement) -> Cyclotomic:
    """D_R at an isolated point, fixed by D_C = D_R * kappa^(1/2) with kappa^(-1/2) = sqrt_det."""
    return dc_complex(weights, t) * sqrt_det(weights, t)


def dr_real_direct(weights: Sequence[Sequence], t: TorusElement) -> Cyclotomic:
    """D_R from the real determinant: i^(#weights) times the positive root of det_R(1 - A^{-1}).

    Each weight contributes the rotation block with angle 2 pi f, whose factor
    det_R^(1/2) = 2 sin(pi f) is positive for 0 < f < 1.
    """
    order = 4 * t.order
    i = exp2pi(Fraction(1, 4), order)
    out = Cyclotomic.one(order)
    for b in weights:
        f = _frac_part(t.exponent(b))
        z = exp2pi(f / 2, order)
        two_sin = (z - z.conj()) * (-i)
        if f != 0 and not two_sin.to_complex().real > 0:
            raise AssertionError("real square root is not positive")
        out = out * two_sin * i
    return out


# ---------------------------------------------------------------------------
# face-level data

def epsilon(rs: RootSystem, w: AffineWeylElement, sigma: FaceData, v: Sequence) -> int:
    """Number of alpha in R_{+,sigma} with <w_1 alpha, v> < 0 (w_1 the finite part of w)."""
    count = 0
    for a in sigma.R_plus_sigma:
        x = pairing(w.finite.act_weight(a), v)
        if x == 0:
            raise IrregularElementError(f"<w alpha, v> = 0 for alpha={a}")
        count += x < 0
    return count


def root_sign_data(rs: RootSystem, w: AffineWeylElement, sigma: FaceData, t: TorusElement):
    """(sign, shift): (-1)^(eps(w,sigma) + l(w)) and w(rho - rho_sigma) under the level-c action."""
    v = canonical_coweight(rs, t.v)
    e = epsilon(rs, w, sigma, v)
    sign = -1 if (e + affine_length(rs, w)) % 2 else 1
    shift = w.act_weight(rs, rs.dual_coxeter, sigma.rho_minus_rho_sigma)
    return sign, shift


def half_weight_monomial(rs: RootSystem, t: TorusElement, mu: Sequence) -> Cyclotomic:
    """exp(2 pi i <mu, v>) for a possibly half-integral weight, with v taken in W . alcove."""
    v = canonical_coweight(rs, t.v)
    q = pairing(mu, v)
    return exp2pi(q, math.lcm(2 * t.order, q.denominator))


def restricted_character(rs: RootSystem, sigma: FaceData, mu: Sequence[int], t1: TorusElement) -> Cyclotomic:
    """chi_{mu,sigma}(t1) = [sum_{w1 in W_sigma} (-1)^l(w1) t1^{w1(mu+rho) - rho}] / D_C(g_sigma/t, t1)."""
    den = dc_complex(sigma.R_plus_sigma, t1)
    if den.is_zero():
        raise IrregularElementError(f"t1 = exp({t1.v}) is not regular for G_sigma")
    shifted = tuple(a + b for a, b in zip(mu, rs.rho))
    num = _zero(t1)
    for w1 in sigma.W_sigma:
        e = tuple(a - b for a, b in zip(w1.act_weight(shifted), rs.rho))
        term = weight_monomial(t1, e)
        num = num + term if w1.sign > 0 else num - term
    return num / den


def character_by_restriction(rs: RootSystem, sigma: FaceData, mu: Sequence[int], t: TorusElement) -> Cyclotomic:
    """sum over w in W/W_sigma of chi_{mu,sigma}(w^-1 t) D_C(g_sigma/t, w^-1 t) / D_C(g/t, w^-1 t)."""
    total = _zero(t)
    for w in sigma.cosets:
        t1 = t.weyl_act(w.inverse())
        ratio = dc_complex(sigma.R_plus_sigma, t1) / dc_complex(rs.positive_roots, t1)
        total = total + restricted_character(rs, sigma, mu, t1) * ratio
    return total


# ---------------------------------------------------------------------------
# per-level session data

class CharacterTable:
    """Level-k weights, the points t_lambda, |J(t_lambda)|^2 and a memo of chi_mu(t_lambda).

    Filling the memo is idempotent, so concurrent readers may race on a miss
    without harm.
    """

    def __init__(self, rs: RootSystem, k):
        self.rs = rs
        self.k = as_level(rs, k)
        self.weights: list[tuple] = [tuple(w) for w in level_weights(rs, self.k)]
        self.index = {w: i for i, w in enumerate(self.weights)}
        self.points: list[TorusElement] = [t_lambda(rs, self.k, w) for w in self.weights]
        self.t_order = torus_group_order(rs, shifted_level(rs, self.k))
        self.norm_sq: list[Cyclotomic] = [denominator_norm_sq(rs, t) for t in self.points]
        self._chi: dict = {}

    def __len__(self):
        return len(self.weights)

    def check_weight(self, mu: Sequence) -> tuple:
        mu = tuple(int(x) for x in mu)
        if mu not in self.index:
            raise LevelError(f"{mu} is not a weight of {self.rs.name} at level {self.k}")
        return mu

    def chi(self, mu: Sequence, i: int) -> Cyclotomic:
        """chi_mu(t_lambda) for lambda = self.weights[i]."""
        key = (tuple(mu), i)
        val = self._chi.get(key)
        if val is None:
            val = weyl_character(self.rs, mu, self.points[i])
            self._chi[key] = val
        return val

    def conjugate(self, mu: Sequence) -> tuple:
        return tuple(int(x) for x in self.rs.conjugate_weight(mu))
