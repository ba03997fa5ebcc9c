import itertools
from fractions import Fraction

import pytest

from loopfix.alcove import (AlcoveError, affine_length, affine_simple_reflection, alcove_vertices,
                            canonical_coweight, face_data, face_of, faces, from_finite, gamma_in_face,
                            in_closed_alcove, stabilizer, translation)
from loopfix.levelk import b_sharp, level_weights
from loopfix.rootsys import build_root_system

SMALL = ["A1", "A2", "B2", "G2", "A1xA1", "A3"]


@pytest.mark.parametrize("name,count", [("A1", 3), ("A2", 7), ("A1xA1", 9), ("G2", 7), ("B2", 7), ("A3", 15)])
def test_face_counts(name, count):
    assert len(faces(build_root_system(name))) == count


@pytest.mark.parametrize("name", SMALL)
def test_face_structure(name):
    rs = build_root_system(name)
    for f in faces(rs):
        fd = face_data(rs, f)
        assert gamma_in_face(rs, fd)
        assert len(fd.W_sigma) * len(fd.cosets) == rs.weyl_order
        assert face_of(rs, f.interior_point) == f
        # R_{+,sigma} is half of R_sigma
        assert 2 * len(fd.R_plus_sigma) == len(fd.R_sigma)
        assert len(stabilizer(rs, f)) == len(fd.W_sigma)


def test_interior_and_vertex_zero():
    rs = build_root_system("A2")
    fs = faces(rs)
    assert fs[0].is_interior
    fd = face_data(rs, fs[0])
    assert fd.R_sigma == () and len(fd.W_sigma) == 1
    zero = face_of(rs, (0, 0))
    fd0 = face_data(rs, zero)
    assert set(fd0.R_plus_sigma) == set(rs.positive_roots)
    assert len(fd0.W_sigma) == rs.weyl_order


def test_su2_vertex_one():
    rs = build_root_system("A1")
    v1 = alcove_vertices(rs)[0][1]
    fd = face_data(rs, face_of(rs, v1))
    assert fd.R_plus_sigma == ((-2,),)


def test_outside_rejected():
    rs = build_root_system("A1")
    with pytest.raises(AlcoveError):
        face_of(rs, (Fraction(3, 4),))
    with pytest.raises(AlcoveError):
        face_of(rs, (Fraction(-1, 4),))


@pytest.mark.parametrize("name", ["A1", "A2", "G2"])
def test_level_weights_land_in_closed_alcove(name):
    rs = build_root_system(name)
    for k in (1, 2):
        for lam in level_weights(rs, k):
            assert in_closed_alcove(rs, b_sharp(rs, k, lam))


def test_wall_reflections_fix_walls():
    rs = build_root_system("B2")
    for f in faces(rs):
        for u in stabilizer(rs, f):
            assert u.act(f.interior_point) == tuple(Fraction(x) for x in f.interior_point)


def test_affine_length():
    rs = build_root_system("A2")
    for w in rs.weyl_group:
        assert affine_length(rs, from_finite(rs, w)) == w.length
    s0 = affine_simple_reflection(rs, 0, 0)
    assert affine_length(rs, s0) == 1
    for xi in itertools.product(range(-2, 3), repeat=2):
        t = translation(rs, xi)
        assert affine_length(rs, t) % 2 == 0


def test_canonical_coweight():
    rs = build_root_system("A2")
    for num in itertools.product(range(-7, 8), repeat=2):
        v = tuple(Fraction(x, 5) for x in num)
        c = canonical_coweight(rs, v)
        assert all((a - b).denominator == 1 for a, b in zip(c, v))
        # c = w x with x in the closed alcove
        assert any(in_closed_alcove(rs, w.act_coweight(c)) for w in rs.weyl_group)
