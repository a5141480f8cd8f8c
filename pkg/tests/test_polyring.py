"""Integer polynomial ring: arithmetic, evaluation, serialization."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hychro.polyring import ONE, X, ZERO, Poly

coeffs = st.lists(st.integers(min_value=-40, max_value=40), max_size=7)
polys = coeffs.map(Poly)
points = st.one_of(
    st.integers(min_value=-9, max_value=9),
    st.fractions(min_value=-3, max_value=3, max_denominator=12),
)


def test_trailing_zeros_stripped():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0, 0]).coeffs == ()
    assert Poly([]).coeffs == ()


def test_zero_identity():
    assert ZERO.is_zero
    assert not ZERO
    assert ZERO.degree == -1
    assert ZERO.lead == 0


def test_constants():
    assert ONE == Poly([1])
    assert X == Poly([0, 1])
    assert X.degree == 1
    assert ONE.degree == 0


def test_non_integer_coefficients_rejected():
    with pytest.raises(TypeError):
        Poly([1.5])
    with pytest.raises(TypeError):
        Poly([Fraction(1, 2)])


def test_monomial():
    assert Poly.monomial(3) == Poly([0, 0, 0, 1])
    assert Poly.monomial(2, -4) == Poly([0, 0, -4])
    assert Poly.monomial(0, 0) == ZERO


def test_decimal_string_roundtrip():
    p = Poly([0, -12345678901234567890, 7])
    assert Poly.from_decimal_strings(p.to_decimal_strings()) == p
    assert p.to_decimal_strings() == ("0", "-12345678901234567890", "7")


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p
    assert p * ONE == p
    assert p - p == ZERO
    assert -(-p) == p


@given(polys, polys, points)
def test_evaluation_is_a_homomorphism(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)


def test_evaluation_exact_fraction():
    # x^3 - 2 at 5/4 is 125/64 - 128/64
    p = Poly([-2, 0, 0, 1])
    assert p(Fraction(5, 4)) == Fraction(-3, 64)
    assert isinstance(p(3), int)


@given(polys, polys)
def test_derivative_product_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(polys, st.integers(min_value=0, max_value=4))
def test_power_matches_repeated_product(p, k):
    expect = ONE
    for _ in range(k):
        expect = expect * p
    assert p ** k == expect


@given(polys, st.integers(min_value=-6, max_value=6))
def test_int_scaling(p, c):
    assert c * p == Poly([c]) * p
    assert p * c == c * p


def test_div_x():
    assert Poly([0, 2, 3]).div_x() == Poly([2, 3])
    assert ZERO.div_x() == ZERO
    with pytest.raises(ValueError):
        Poly([1, 1]).div_x()


def test_multiplicity_at_zero():
    assert Poly([0, 0, 5, 1]).multiplicity_at_zero() == 2
    assert Poly([3]).multiplicity_at_zero() == 0
    with pytest.raises(ValueError):
        ZERO.multiplicity_at_zero()


@given(polys)
def test_hash_consistent_with_equality(p):
    assert hash(p) == hash(Poly(list(p.coeffs)))


@given(polys)
def test_degree_and_lead(p):
    if p.is_zero:
        assert p.degree == -1
    else:
        assert p.lead == p.coeffs[-1] != 0
        assert p.degree == len(p.coeffs) - 1
