"""The fundamental alcove, its open faces and the per-face root data.

A face is named by the walls it lies on, one wall set per simple factor:
wall 0 is {alpha_0 = 1} (highest root) and wall i is {alpha_i = 0}.  For a
simple factor the alcove is a simplex with vertex v_i opposite wall i, so the
face with wall set S is the relative interior of the hull of {v_i : i not in S}.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .levelk import b_flat, b_sharp
from .rootsys import RootSystem, WeylElement, _rational_inverse, pairing


class AlcoveError(ValueError):
    pass


@dataclass(frozen=True)
class AlcoveFace:
    walls: tuple[frozenset, ...]
    interior_point: tuple

    def name(self, rs: RootSystem) -> str:
        return " x ".join(f"{f}:{sorted(w)}" for f, w in zip(rs.factors, self.walls))

    @property
    def is_interior(self) -> bool:
        return all(not w for w in self.walls)

    def __eq__(self, other):
        return isinstance(other, AlcoveFace) and self.walls == other.walls

    def __hash__(self):
        return hash(self.walls)


@lru_cache(maxsize=None)
def _fundamental_coweights(rs: RootSystem) -> list[tuple[Fraction, ...]]:
    # <alpha_j, omega_i^vee> = delta_ij, i.e. A^T omega_i^vee = e_i
    inv_t = _rational_inverse(rs.cartan.T.tolist())
    n = rs.rank
    return [tuple(inv_t[r][i] for r in range(n)) for i in range(n)]


@lru_cache(maxsize=None)
def alcove_vertices(rs: RootSystem) -> tuple[tuple[tuple[Fraction, ...], ...], ...]:
    """Per factor, the vertices v_0 = 0, v_1, ..., v_r (full coroot coordinates)."""
    omegas = _fundamental_coweights(rs)
    out = []
    for j, sl in enumerate(rs.slices):
        marks = [rs.positive_root_coords[rs.root_index[rs.highest_roots[j]]][i] for i in range(sl.start, sl.stop)]
        verts = [tuple(Fraction(0) for _ in range(rs.rank))]
        for i, m in zip(range(sl.start, sl.stop), marks):
            verts.append(tuple(x / m for x in omegas[i]))
        out.append(tuple(verts))
    return tuple(out)


def wall_values(rs: RootSystem, xi: Sequence) -> list[list[Fraction]]:
    """Per factor: [1 - alpha_0(xi), alpha_1(xi), ..., alpha_r(xi)]; all >= 0 on the closed alcove."""
    out = []
    for j, sl in enumerate(rs.slices):
        vals = [1 - pairing(rs.highest_roots[j], xi)]
        vals += [pairing(rs.simple_root(i), xi) for i in range(sl.start, sl.stop)]
        out.append(vals)
    return out


def in_closed_alcove(rs: RootSystem, xi: Sequence) -> bool:
    return all(v >= 0 for vals in wall_values(rs, xi) for v in vals)


def _barycenter(points) -> tuple:
    pts = list(points)
    n = len(pts[0])
    return tuple(sum((p[i] for p in pts), Fraction(0)) / len(pts) for i in range(n))


def _make_face(rs: RootSystem, walls: Sequence[frozenset]) -> AlcoveFace:
    verts = alcove_vertices(rs)
    point = [Fraction(0)] * rs.rank
    for j, S in enumerate(walls):
        keep = [verts[j][i] for i in range(len(verts[j])) if i not in S]
        if not keep:
            raise AlcoveError(f"wall set {sorted(S)} of factor {rs.factors[j]} has empty intersection")
        b = _barycenter(keep)
        point = [p + q for p, q in zip(point, b)]
    face = AlcoveFace(tuple(frozenset(S) for S in walls), tuple(point))
    assert _satisfies(rs, face, face.interior_point)
    return face


def _satisfies(rs: RootSystem, face: AlcoveFace, xi: Sequence) -> bool:
    """Wall equalities for the face's walls and strict inequalities for the others."""
    for S, vals in zip(face.walls, wall_values(rs, xi)):
        for i, v in enumerate(vals):
            if (i in S) != (v == 0) or v < 0:
                return False
    return True


def faces(rs: RootSystem) -> list[AlcoveFace]:
    """Every open face of the alcove, interior first, then by number of walls."""
    per_factor = []
    for st in rs.factors:
        idx = range(st.rank + 1)
        subsets = [frozenset(c) for size in range(st.rank + 1) for c in itertools.combinations(idx, size)]
        per_factor.append(subsets)
    combos = sorted(itertools.product(*per_factor),
                    key=lambda ws: (sum(len(w) for w in ws), [sorted(w) for w in ws]))
    return [_make_face(rs, ws) for ws in combos]


def face_of(rs: RootSystem, point: Sequence) -> AlcoveFace:
    """The open face containing a point of the closed alcove."""
    point = tuple(Fraction(x) for x in point)
    if len(point) != rs.rank:
        raise AlcoveError(f"point has {len(point)} coordinates, rank is {rs.rank}")
    vals = wall_values(rs, point)
    if any(v < 0 for vs in vals for v in vs):
        raise AlcoveError(f"point {point} lies outside the closed alcove")
    return _make_face(rs, [frozenset(i for i, v in enumerate(vs) if v == 0) for vs in vals])


def face_vertices(rs: RootSystem, face: AlcoveFace) -> list[tuple]:
    verts = alcove_vertices(rs)
    per = [[verts[j][i] for i in range(len(verts[j])) if i not in S] for j, S in enumerate(face.walls)]
    out = []
    for combo in itertools.product(*per):
        out.append(tuple(sum(c[i] for c in combo) for i in range(rs.rank)))
    return out


def coxeter_rho_point(rs: RootSystem) -> tuple:
    """B_c^sharp(rho), a point of the open alcove."""
    return b_sharp(rs, rs.dual_coxeter, rs.rho)


@dataclass(frozen=True, eq=False)
class FaceData:
    """Root data attached to a face; the Weyl-group parts are filled on first use."""

    rs: RootSystem
    face: AlcoveFace
    R_sigma: tuple
    R_plus_sigma: tuple
    rho_sigma: tuple
    gamma_sigma: tuple

    @cached_property
    def rho_minus_rho_sigma(self) -> tuple:
        return tuple(Fraction(1) - r for r in self.rho_sigma)

    @cached_property
    def W_sigma(self) -> tuple:
        """Elements w of W with w v - v constant and integral over the face vertices."""
        verts = face_vertices(self.rs, self.face)
        out = []
        for w in self.rs.weyl_group:
            shifts = {tuple(x - y for x, y in zip(w.act_coweight(v), v)) for v in verts}
            if len(shifts) == 1 and all(x.denominator == 1 for x in next(iter(shifts))):
                out.append(w)
        return tuple(out)

    @cached_property
    def cosets(self) -> tuple:
        """Representatives of W/W_sigma: the w with w R_{+,sigma} positive."""
        rs = self.rs
        return tuple(w for w in rs.weyl_group
                     if all(rs.is_positive_root(w.act_weight(a)) for a in self.R_plus_sigma))


def face_data(rs: RootSystem, sigma: AlcoveFace) -> FaceData:
    return _face_data(rs, sigma.walls)


@lru_cache(maxsize=None)
def _face_data(rs: RootSystem, walls) -> FaceData:
    sigma = _make_face(rs, walls)
    verts = face_vertices(rs, sigma)
    p = coxeter_rho_point(rs)
    R_sigma, R_plus = [], []
    for a in rs.roots:
        vals = {pairing(a, v) for v in verts}
        if len(vals) == 1:
            (val,) = vals
            if val.denominator == 1:
                R_sigma.append(a)
                if pairing(a, p) >= val:
                    R_plus.append(a)
    rho_sigma = tuple(sum((Fraction(a[i]) for a in R_plus), Fraction(0)) / 2 for i in range(rs.rank))
    gamma = b_sharp(rs, rs.dual_coxeter, tuple(1 - r for r in rho_sigma))
    return FaceData(rs, sigma, tuple(R_sigma), tuple(R_plus), rho_sigma, gamma)


def gamma_in_face(rs: RootSystem, fd: FaceData) -> bool:
    return _satisfies(rs, fd.face, fd.gamma_sigma)


# ---------------------------------------------------------------------------
# affine Weyl group W_aff = W x| coroot lattice

@dataclass(frozen=True, eq=False)
class AffineWeylElement:
    """x -> w x + translation on the Cartan subalgebra (coroot coordinates)."""

    finite: WeylElement
    translation: tuple

    def act(self, xi: Sequence) -> tuple:
        return tuple(a + b for a, b in zip(self.finite.act_coweight(xi), self.translation))

    def act_weight(self, rs: RootSystem, level, mu: Sequence) -> tuple:
        """Level-``level`` action on weights: mu -> w mu + B_level^flat(translation)."""
        shift = b_flat(rs, level, self.translation)
        return tuple(a + b for a, b in zip(self.finite.act_weight(mu), shift))

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        t = tuple(a + b for a, b in zip(self.finite.act_coweight(other.translation), self.translation))
        return AffineWeylElement(self.finite * other.finite, t)

    def key(self):
        return (self.finite.key, tuple(self.translation))

    def __eq__(self, other):
        return isinstance(other, AffineWeylElement) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"AffineWeylElement({self.finite.word}, {tuple(int(x) for x in self.translation)})"


def affine_identity(rs: RootSystem) -> AffineWeylElement:
    return AffineWeylElement(rs.identity, tuple([0] * rs.rank))


def translation(rs: RootSystem, xi: Sequence[int]) -> AffineWeylElement:
    return AffineWeylElement(rs.identity, tuple(int(x) for x in xi))


def affine_simple_reflection(rs: RootSystem, factor: int, wall: int) -> AffineWeylElement:
    """Reflection in a wall of the alcove (wall numbering as for faces)."""
    if wall == 0:
        s = rs.reflection_for_root(rs.highest_roots[factor])
        return AffineWeylElement(s, tuple(int(x) for x in rs.highest_coroots[factor]))
    i = rs.slices[factor].start + wall - 1
    return AffineWeylElement(rs.simple_reflections[i], tuple([0] * rs.rank))


def from_finite(rs: RootSystem, w: WeylElement) -> AffineWeylElement:
    return AffineWeylElement(w, tuple([0] * rs.rank))


def affine_length(rs: RootSystem, w: AffineWeylElement) -> int:
    """Number of affine root hyperplanes {alpha = n} separating the alcove from w(alcove)."""
    p = coxeter_rho_point(rs)
    q = w.act(p)
    total = 0
    for a in rs.positive_roots:
        x = pairing(a, q)
        # alpha(p) lies in (0, 1)
        total += abs(x.__floor__())
    return total


def stabilizer_generators(rs: RootSystem, sigma: AlcoveFace) -> list[AffineWeylElement]:
    """Affine reflections in the walls containing sigma; they generate its stabilizer."""
    return [affine_simple_reflection(rs, j, i) for j, S in enumerate(sigma.walls) for i in sorted(S)]


def canonical_coweight(rs: RootSystem, v: Sequence) -> tuple:
    """The representative of v modulo the coroot lattice lying in W . alcove."""
    x = tuple(Fraction(a) for a in v)
    n = rs.rank
    inv = np.eye(n, dtype=np.int64)  # inverse of the accumulated finite part
    for _ in range(100000):
        moved = False
        for j, sl in enumerate(rs.slices):
            for i in range(sl.start, sl.stop):
                if pairing(rs.simple_root(i), x) < 0:
                    s = rs.simple_reflections[i]
                    x = s.act_coweight(x)
                    inv = inv @ s.comatrix
                    moved = True
            a0 = pairing(rs.highest_roots[j], x)
            if a0 > 1:
                s = affine_simple_reflection(rs, j, 0)
                x = s.act(x)
                inv = inv @ s.finite.comatrix
                moved = True
        if not moved:
            break
    else:
        raise AssertionError("alcove reduction did not terminate")
    return tuple(sum((int(inv[r, c]) * x[c] for c in range(n)), Fraction(0)) for r in range(n))


def stabilizer(rs: RootSystem, sigma: AlcoveFace, limit: int = 100000) -> list[AffineWeylElement]:
    """All elements of W_aff fixing sigma pointwise (a finite group), by closure of the wall reflections."""
    gens = stabilizer_generators(rs, sigma)
    seen = {affine_identity(rs): None}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    seen[h] = None
                    nxt.append(h)
                    if len(seen) > limit:
                        raise AlcoveError("stabilizer closure did not terminate")
        frontier = nxt
    return list(seen)
