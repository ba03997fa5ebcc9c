import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopfix.fusion import FusionRing, IntegralityError, fusion_coefficient, fusion_product, verlinde_number
from loopfix.levelk import LevelError
from loopfix.rootsys import build_root_system

from oracles import su2_fusion, su2_verlinde_float

RINGS = {}


def ring(name, k):
    if (name, k) not in RINGS:
        RINGS[name, k] = FusionRing(build_root_system(name), k)
    return RINGS[name, k]


def test_su2_level_one():
    r = ring("A1", 1)
    assert fusion_coefficient(r, (1,), (1,), (0,)) == 1
    assert fusion_coefficient(r, (1,), (1,), (1,)) == 0


def test_su2_level_two_products():
    r = ring("A1", 2)
    assert fusion_product(r, (1,), (1,)) == [1, 0, 1]
    assert fusion_product(r, (2,), (2,)) == [1, 0, 0]


@pytest.mark.parametrize("name,k", [("A1", 3), ("A2", 2), ("G2", 1), ("B2", 1)])
def test_unit(name, k):
    r = ring(name, k)
    zero = r.basis[0]
    for nu in r.basis:
        assert fusion_product(r, zero, nu) == [int(x == nu) for x in r.basis]


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_commutative(data):
    r = ring("A2", 2)
    mu, nu, rho = (data.draw(st.sampled_from(r.basis)) for _ in range(3))
    assert r.coefficient(mu, nu, rho) == r.coefficient(nu, mu, rho)


@pytest.mark.parametrize("k", range(1, 7))
def test_su2_matches_truncated_clebsch_gordan(k):
    r = ring("A1", k)
    for a in range(k + 1):
        for b in range(k + 1):
            want = su2_fusion(a, b, k)
            assert fusion_product(r, (a,), (b,)) == [want.get(c, 0) for c in range(k + 1)]


def test_a2_level_two_known_products():
    r = ring("A2", 2)
    # 3 x 3bar = 1 + 8 survives at level 2
    vec = fusion_product(r, (1, 0), (0, 1))
    assert {b: c for b, c in zip(r.basis, vec) if c} == {(0, 0): 1, (1, 1): 1}
    # simple currents: (2,0) * (2,0) = (0,2)
    assert {b: c for b, c in zip(r.basis, fusion_product(r, (2, 0), (2, 0))) if c} == {(0, 2): 1}


def test_bad_weight():
    with pytest.raises(LevelError):
        ring("A1", 1).coefficient((2,), (0,), (0,))


@pytest.mark.parametrize("k", range(1, 5))
def test_verlinde_genus_one(k):
    assert verlinde_number(ring("A1", k), 1) == k + 1


def test_verlinde_examples():
    assert verlinde_number(ring("A1", 1), 2) == 4
    r = ring("A2", 2)
    for mu in r.basis:
        for nu in r.basis:
            assert verlinde_number(r, 0, [mu, nu]) == int(nu == r.chars.conjugate(mu))


@pytest.mark.parametrize("k,g", [(k, g) for k in range(1, 5) for g in range(0, 4)])
def test_su2_verlinde_against_trig_form(k, g):
    assert abs(verlinde_number(ring("A1", k), g) - su2_verlinde_float(k, g)) < 1e-6


def test_three_point_genus_zero_is_fusion():
    r = ring("A2", 2)
    for mu in r.basis:
        for nu in r.basis:
            for rho in r.basis:
                assert verlinde_number(r, 0, [mu, nu, rho]) == r.coefficient(mu, nu, r.chars.conjugate(rho))


def test_negative_genus():
    with pytest.raises(ValueError):
        verlinde_number(ring("A1", 1), -1)


def test_table_formats():
    r = ring("A1", 2)
    doc = r.to_json()
    assert doc["basis"] == [[0], [1], [2]]
    assert doc["table"]["[1]*[1]"] == [1, 0, 1]
    assert "chi[1] * chi[1] = chi[0] + chi[2]" in r.format_table()


def test_integrality_guard():
    from loopfix.exact import Cyclotomic, root_of_unity
    from loopfix.fusion import _as_int
    assert _as_int(Cyclotomic.rational(3, 8), "x") == 3
    with pytest.raises(IntegralityError):
        _as_int(Cyclotomic.rational(1, 8) / 2, "x")
    with pytest.raises(IntegralityError):
        _as_int(root_of_unity(8, 1), "x")
