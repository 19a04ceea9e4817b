import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from pfourier.anf import AnfPolynomial, moebius
from pfourier.core import BooleanFunction, make_family
from pfourier.dyadic import Dyadic
from pfourier.approx import (
    PolynomialAtom,
    ProbabilisticPolynomial,
    RandomizedPhaseFamily,
    check_distribution_error,
    check_pointwise_error,
    expected_value,
    expected_values,
    polynomial_error,
    theorem3_polynomial,
)
from pfourier.periodic import (
    PeriodicRepresentation,
    c3_recipe,
    canonicalize,
    cq_recipe,
    from_anf,
    from_fourier,
    parity_rep,
)

D = Dyadic
CHSH = RandomizedPhaseFamily(2, ((1, {0: D(1, 2), 1: D(-1, 2), 2: D(-1, 2)}),))
CHSH_EPS = (1 - 1 / math.sqrt(2)) / 2


def test_expected_value_examples():
    xor = RandomizedPhaseFamily.single(parity_rep(2, [1, 2]))
    for b in oracles.points(2):
        x = [1 - 2 * v for v in b]
        assert expected_value(xor, x) == pytest.approx(x[0] * x[1])
    assert expected_value(CHSH, (1, 1)) == pytest.approx(1 / math.sqrt(2))
    t = 0.3
    sym = RandomizedPhaseFamily(1, ((0.5, {0: t}), (0.5, {0: -t})))
    assert expected_value(sym, (1,)) == pytest.approx(math.cos(math.pi * t))


def test_family_validation():
    with pytest.raises(ValueError):
        RandomizedPhaseFamily(1, ((0.6, {0: 0}), (0.6, {0: 1})))
    with pytest.raises(ValueError):
        RandomizedPhaseFamily(1, ((1, {3: D(1, 1)}),))
    fam = RandomizedPhaseFamily(2, ((0.25, {1: D(1, 2)}), (0.75, {3: 0.1})))
    assert fam.support == frozenset({1, 3})
    assert RandomizedPhaseFamily.from_dict(fam.to_dict()) == fam


def test_pointwise_checks():
    cq2 = make_family("cq", 2)
    assert check_pointwise_error(CHSH, cq2, CHSH_EPS + 1e-9)
    assert not check_pointwise_error(CHSH, cq2, CHSH_EPS - 1e-6)
    rep = RandomizedPhaseFamily.single(cq_recipe(4))
    assert check_pointwise_error(rep, make_family("cq", 4), 0)
    assert not check_pointwise_error(rep, ~make_family("cq", 4), 0.4)
    with pytest.raises(ValueError):
        check_pointwise_error(rep, make_family("cq", 4), 0.5)


def test_distribution_checks():
    uniform = np.full(4, 0.25)
    assert check_distribution_error(CHSH, make_family("cq", 2), uniform, CHSH_EPS + 1e-9)
    const = RandomizedPhaseFamily(2, ((1, {}),))
    assert not check_distribution_error(const, make_family("xor", 2), uniform, 0.49)
    assert check_distribution_error(const, make_family("xor", 2), uniform, 0.5)
    rep = RandomizedPhaseFamily.single(from_anf(make_family("maj", 3)))
    skewed = np.arange(8) / 28
    assert check_distribution_error(rep, make_family("maj", 3), skewed, 0)
    with pytest.raises(ValueError):
        check_distribution_error(rep, make_family("maj", 3), np.ones(8), 0)


def y_reference(rep, ell):
    """Bits of k 2^(ell+1) - 2^ell * phase_sum, computed with Fractions at every point."""
    canon = canonicalize(rep)
    total = sum(c.as_fraction() for c in canon.phi.values())
    k = math.ceil(total / 2)
    tables = [[0] * (1 << rep.n) for _ in range(ell + 1)]
    for m, b in enumerate(oracles.points(rep.n)):
        v = k * 2 ** (ell + 1) - 2 ** ell * oracles.phase_at(canon.phi, b)
        assert v.denominator == 1 and v >= 0
        for i in range(ell + 1):
            tables[i][m] = (int(v) >> i) & 1
    return [moebius(BooleanFunction(rep.n, t)) for t in tables]


@pytest.mark.parametrize("n", range(1, 7))
def test_weight_bits_match_reference(n):
    reps = [cq_recipe(n), from_anf(make_family("xor", n))]
    if n <= 4:
        # dense: 2^n - 1 parity variables
        reps += [from_fourier(make_family("or", n)), from_anf(make_family("and", n))]
    for rep in reps:
        ell = canonicalize(rep).digits
        pp = theorem3_polynomial(rep)
        assert list(pp.atoms[0].ys) == y_reference(rep, ell)


def test_cq3_collapses_to_majority():
    pp = theorem3_polynomial(cq_recipe(3))
    ys = pp.atoms[0].ys
    assert len(ys) == 3
    assert ys[2].monomials == frozenset({0b011, 0b110, 0b101})
    assert ys[2].degree == 2
    assert polynomial_error(pp, make_family("cq", 3)) == 0


def test_xor2_and_constant():
    ys = theorem3_polynomial(parity_rep(2, [1, 2])).atoms[0].ys
    assert ys[1].monomials == frozenset({1, 2})
    pp = theorem3_polynomial(PeriodicRepresentation(2, {0: 1}))
    assert [a.poly.monomials for a in pp.atoms] == [frozenset({0})]


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("name", ["and", "or", "xor", "cq", "c3"])
def test_degree_bounds_and_collapse(name, n):
    f = make_family(name, n)
    reps = [from_anf(f)]
    if name == "cq" and n >= 2:
        reps.append(cq_recipe(n))
    if name == "c3" and n >= 3:
        reps.append(c3_recipe(n))
    for rep in reps:
        if len(canonicalize(rep).monomials) > 20:
            continue
        pp = theorem3_polynomial(rep)
        ys = pp.atoms[0].ys
        ell = len(ys) - 1
        assert not ys[0].monomials or ys[0].monomials == frozenset({0})
        assert all(ys[i].degree <= 2 ** (i - 1) for i in range(1, ell + 1))
        assert all(not y.monomials for y in ys[:-1])
        assert ys[-1] == moebius(f)
        assert pp.degree <= 2 ** ell - 1
        assert polynomial_error(pp, f) == 0


dyadic_phase = st.builds(Dyadic, st.integers(-15, 15), st.integers(0, 3))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(1, 5),
                       st.dictionaries(st.integers(0, (1 << n) - 1), dyadic_phase, max_size=4)),
             min_size=1, max_size=3),
    st.lists(st.integers(0, 1), min_size=1 << n, max_size=1 << n))))
def test_polynomial_error_equals_half_the_value_gap(data):
    n, raw_atoms, bits = data
    total = sum(w for w, _ in raw_atoms)
    fam = RandomizedPhaseFamily(n, tuple((Fraction(w, total), phi) for w, phi in raw_atoms))
    f = BooleanFunction(n, bits)
    pp = theorem3_polynomial(fam)
    gap = np.abs(f.signs() - expected_values(fam)).max() / 2
    assert polynomial_error(pp, f) == pytest.approx(gap, abs=1e-9)
    assert sum(a.weight for a in pp.atoms) == pytest.approx(1.0)
    ell = max(len(a.ys) for a in pp.atoms) - 1
    assert pp.degree <= max(2 ** ell - 1, 0)


def test_polynomial_error_mixtures():
    f = make_family("maj", 3)
    good, bad = moebius(f), moebius(~f)
    assert polynomial_error(ProbabilisticPolynomial(3, (PolynomialAtom(1.0, bad, ()),)), f) == 1
    mix = ProbabilisticPolynomial(3, (PolynomialAtom(0.5, good, ()), PolynomialAtom(0.5, bad, ())))
    assert polynomial_error(mix, f) == 0.5


def test_non_dyadic_family_rejected():
    fam = RandomizedPhaseFamily(1, ((1, {0: 0.3}),))
    with pytest.raises(ValueError):
        theorem3_polynomial(fam)
    with pytest.raises(ValueError):
        theorem3_polynomial(cq_recipe(3), ell=1)
