from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pfourier.dyadic import Dyadic, arith, as_dyadic, digits, integer_parity, reduce_mod

nums = st.integers(min_value=-10**6, max_value=10**6)
pows = st.integers(min_value=0, max_value=40)
dyadics = st.builds(Dyadic, nums, pows)


def frac(d):
    return Fraction(d.num, 1 << d.den_pow)


@given(dyadics, dyadics)
def test_ring_ops_match_fraction(a, b):
    assert frac(a + b) == frac(a) + frac(b)
    assert frac(a - b) == frac(a) - frac(b)
    assert frac(a * b) == frac(a) * frac(b)
    assert frac(-a) == -frac(a)
    assert (a < b) == (frac(a) < frac(b))
    assert (a == b) == (frac(a) == frac(b))


@given(dyadics)
def test_reduced_form(a):
    if a.num == 0:
        assert a.den_pow == 0
    elif a.den_pow:
        assert a.num % 2 == 1
    assert digits(a) == a.den_pow
    assert hash(a) == hash(frac(a))


@given(dyadics, st.sampled_from([1, 2]))
def test_reduce_mod(a, m):
    residue, carry = reduce_mod(a, m)
    assert 0 <= residue < m
    assert frac(residue) + carry * m == frac(a)


@given(dyadics, st.integers(min_value=-20, max_value=20))
def test_scale_pow2(a, e):
    assert frac(a.scale_pow2(e)) == frac(a) * Fraction(2) ** e


def test_negative_den_pow_normalizes():
    assert Dyadic(3, -2) == 12
    assert Dyadic(12, 2) == Dyadic(3, 0)


def test_non_dyadic_rejected():
    with pytest.raises(ValueError):
        as_dyadic(Fraction(1, 3))
    with pytest.raises(ValueError):
        Dyadic.from_fraction(Fraction(5, 6))


def test_parsing_and_json():
    assert as_dyadic("3/8") == Dyadic(3, 3)
    d = Dyadic(-5, 4)
    assert Dyadic.from_dict(d.to_dict()) == d
    assert d.to_dict() == {"num": "-5", "den_pow": 4}


def test_arith_dispatch():
    assert arith("add", Dyadic(1, 1), Dyadic(1, 2)) == Dyadic(3, 2)
    assert arith("negate", 3) == -3
    assert arith("scale_pow2", Dyadic(3, 1), 3) == 12
    with pytest.raises(ValueError):
        arith("div", 1, 2)


def test_integer_parity():
    assert integer_parity(Dyadic(7)) == 1
    assert integer_parity(Dyadic(-4)) == 0
    assert integer_parity(Dyadic(1, 1)) is None


def test_floor_ceil():
    assert Dyadic(-3, 1).floor() == -2
    assert Dyadic(-3, 1).ceil() == -1
    assert Dyadic(5, 2).floor() == 1
