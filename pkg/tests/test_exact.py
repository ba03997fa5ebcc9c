from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopfix.exact import Cyclotomic, NotRationalError, cyclotomic_polynomial, exp2pi, root_of_unity

ORDERS = [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15]


@st.composite
def elements(draw, order=None):
    n = order or draw(st.sampled_from(ORDERS))
    d = len(cyclotomic_polynomial(n)) - 1
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=d, max_size=d))
    return Cyclotomic(n, coeffs)


def test_known_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)


def test_sum_of_primitive_cube_roots():
    assert root_of_unity(3, 1) + root_of_unity(3, 2) == -1


def test_roots_of_unity_power():
    for n in ORDERS:
        z = root_of_unity(n, 1)
        assert z ** n == 1
        assert z ** (n + 3) == root_of_unity(n, 3)


def test_equality_across_orders():
    assert root_of_unity(4, 2) == -1
    assert exp2pi(Fraction(1, 4), 8) == root_of_unity(4, 1)
    assert exp2pi(Fraction(3, 6)) == exp2pi(Fraction(1, 2), 10)


def test_sqrt2_not_rational():
    z = root_of_unity(8, 1)
    s = z + z.conj()
    assert s * s == 2
    with pytest.raises(NotRationalError) as info:
        s.to_rational()
    assert abs(info.value.approx - 2 ** 0.5) < 1e-12


def test_to_integer():
    assert Cyclotomic.rational(Fraction(6, 2), 12).to_integer() == 3
    with pytest.raises(NotRationalError):
        Cyclotomic.rational(Fraction(1, 2), 12).to_integer()


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.zero(5).inv()


def test_bad_promotion():
    with pytest.raises(ValueError):
        root_of_unity(4, 1).promote(6)


@given(elements(), elements(), elements())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a


@given(elements())
@settings(max_examples=60, deadline=None)
def test_inverse(a):
    if a.is_zero():
        return
    assert a * a.inv() == 1
    assert (a / a) == 1


@given(elements(), elements())
@settings(max_examples=60, deadline=None)
def test_conjugation(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert a.conj().conj() == a
    assert abs((a * a.conj()).to_complex().imag) < 1e-9
    assert abs(a.conj().to_complex() - a.to_complex().conjugate()) < 1e-9


@given(elements())
@settings(max_examples=40, deadline=None)
def test_json_round_trip(a):
    assert Cyclotomic.from_json(a.to_json()) == a


@given(st.integers(1, 24), st.integers(-50, 50))
def test_float_shadow_of_roots(n, k):
    import cmath, math
    assert abs(root_of_unity(n, k).to_complex() - cmath.exp(2j * math.pi * k / n)) < 1e-9
