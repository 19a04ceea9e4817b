from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from pfourier.anf import (
    AnfPolynomial,
    deg_f2,
    eval_anf,
    format_anf,
    lsb_symmetric,
    moebius,
    multiply,
    parse_anf,
)
from pfourier.core import BooleanFunction, make_family
from pfourier.dyadic import Dyadic
from pfourier.fourier import dimension, gf2_rank, mod3_closed_form, reconstruct, stats, wht

tables = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(st.integers(0, 1), min_size=1 << n, max_size=1 << n).map(
        lambda bits: BooleanFunction(n, bits)))


def as_fraction_map(spec):
    return {m: c.as_fraction() for m, c in spec.coeffs.items()}


@settings(max_examples=60, deadline=None)
@given(tables)
def test_wht_matches_defining_average(f):
    assert as_fraction_map(wht(f)) == oracles.fourier(f, f.n)


@settings(max_examples=60, deadline=None)
@given(tables)
def test_moebius_matches_subset_xor(f):
    assert set(moebius(f).monomials) == oracles.anf(f, f.n)
    assert moebius(f).to_function() == f


@settings(max_examples=40, deadline=None)
@given(tables)
def test_dimension_matches_naive_rank(f):
    spec = wht(f)
    assert dimension(spec) == oracles.gf2_rank(spec.coeffs)


def test_known_spectra():
    # AND_2 = 1/2 + x1/2 + x2/2 - x1x2/2 in the ±1 view
    spec = wht(make_family("and", 2))
    assert spec[[]] == Dyadic(1, 1)
    assert spec[[1, 2]] == Dyadic(-1, 1)
    assert stats(spec) == (4, 3, 2)
    # bent: CQ_4 has flat spectrum of magnitude 1/4
    cq = wht(make_family("cq", 4))
    assert {abs(c) for c in cq.coeffs.values()} == {Dyadic(1, 2)}


def test_reconstruct_all_points():
    f = make_family("maj", 5)
    spec = wht(f)
    for b in oracles.points(5):
        x = [1 - 2 * v for v in b]
        assert reconstruct(spec, x) == 1 - 2 * f(b)
    with pytest.raises(ValueError):
        reconstruct(spec, [1, 0, 1, 1, 1])


def test_spectrum_json_roundtrip():
    spec = wht(make_family("mod", 4, k=3))
    assert type(spec).from_list(4, spec.to_list()) == spec


@pytest.mark.parametrize("n", range(3, 11))
def test_mod3_closed_form(n):
    assert mod3_closed_form(n) == wht(make_family("mod", n, k=3))


def test_gf2_rank():
    assert gf2_rank([0b011, 0b101, 0b110]) == 2
    assert gf2_rank([]) == 0


def test_anf_text_roundtrip():
    p = parse_anf("x1x2+x3+1", 3)
    assert format_anf(p) == "1+x3+x1x2"
    assert parse_anf(format_anf(p), 3) == p
    assert parse_anf("x1+x1", 2).monomials == frozenset()
    assert str(parse_anf("0", 2)) == "0"
    with pytest.raises(ValueError):
        parse_anf("x1*x2", 2)


def test_anf_eval_and_degree():
    p = parse_anf("x1x2+x2x3+x1x3", 3)
    assert deg_f2(p) == 2
    for b in oracles.points(3):
        assert eval_anf(p, b) == int(sum(b) >= 2)


@settings(max_examples=40, deadline=None)
@given(tables, st.data())
def test_multiply_is_pointwise_and(f, data):
    bits = data.draw(st.lists(st.integers(0, 1), min_size=1 << f.n, max_size=1 << f.n))
    g = BooleanFunction(f.n, bits)
    assert multiply(moebius(f), moebius(g)).to_function() == (f & g)
    assert (moebius(f) + moebius(g)).to_function() == (f ^ g)


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("ell", [1, 2, 3])
def test_lsb_symmetric_is_weight_bit(n, ell):
    p = lsb_symmetric(ell, n)
    f = p.to_function()
    w = np.array([bin(m).count("1") for m in range(1 << n)])
    assert np.array_equal(f.table, (w >> (ell - 1)) & 1)
