"""Randomized phase families and the probabilistic polynomials they induce.

A family is a distribution over phase maps; its value at ``x`` is the
expected ``cos(pi * phase_sum)``. A family with dyadic phases of at most
``ell`` binary digits yields a probabilistic GF(2) polynomial of degree at
most ``2**ell - 1`` with the same per-input error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from ._transforms import moebius_gf2
from .anf import AnfPolynomial, moebius
from .core import MAX_VARS, BooleanFunction, as_mask, members
from .dyadic import Dyadic
from .periodic import PeriodicRepresentation, canonicalize, phase_sums

__all__ = [
    "RandomizedPhaseFamily",
    "PolynomialAtom",
    "ProbabilisticPolynomial",
    "expected_value",
    "expected_values",
    "check_pointwise_error",
    "check_distribution_error",
    "theorem3_polynomial",
    "polynomial_error",
]

TOL = 1e-12
MAX_SUPPORT = 20


def _phase(c):
    if isinstance(c, Dyadic):
        return c
    if isinstance(c, (int, Fraction)):
        return Dyadic.from_fraction(Fraction(c))
    if isinstance(c, dict):
        return Dyadic.from_dict(c)
    if isinstance(c, str):
        try:
            return Dyadic.from_fraction(Fraction(c))
        except ValueError:
            return float(c)
    return float(c)


@dataclass(frozen=True)
class RandomizedPhaseFamily:
    """Weighted phase maps ``(w, {mask: phase})``; phases are Dyadic or float."""

    n: int
    atoms: tuple

    def __post_init__(self):
        atoms = []
        for w, phi in self.atoms:
            if isinstance(phi, PeriodicRepresentation):
                phi = phi.phi
            clean = {as_mask(s): _phase(c) for s, c in phi.items()}
            if any(m >> self.n for m in clean):
                raise ValueError(f"phase on a variable outside [1, {self.n}]")
            if w < 0:
                raise ValueError("atom weights must be nonnegative")
            atoms.append((w, clean))
        if not atoms:
            raise ValueError("family needs at least one atom")
        if abs(float(sum(w for w, _ in atoms)) - 1.0) > TOL:
            raise ValueError("atom weights must sum to 1")
        object.__setattr__(self, "atoms", tuple(atoms))

    @classmethod
    def single(cls, rep: PeriodicRepresentation) -> "RandomizedPhaseFamily":
        return cls(rep.n, ((1, rep.phi),))

    @property
    def support(self) -> frozenset:
        """Nonempty monomials used by any atom."""
        return frozenset(m for _, phi in self.atoms for m, c in phi.items() if m and c)

    def to_dict(self) -> dict:
        def enc(c):
            return c.to_dict() if isinstance(c, Dyadic) else c

        return {"n": self.n,
                "atoms": [{"w": float(w),
                           "phi": [{"set": list(members(m)), "coeff": enc(c)}
                                   for m, c in sorted(phi.items())]}
                          for w, phi in self.atoms]}

    @classmethod
    def from_dict(cls, d: dict) -> "RandomizedPhaseFamily":
        atoms = []
        for a in d["atoms"]:
            phi = a["phi"]
            if isinstance(phi, dict):
                phi = {as_mask([int(v) for v in k.split(",") if v]): c for k, c in phi.items()}
            else:
                phi = {as_mask(it["set"]): it["coeff"] for it in phi}
            atoms.append((a["w"], phi))
        return cls(int(d["n"]), tuple(atoms))


def _float_phase_sums(n: int, phi: Mapping[int, object]) -> np.ndarray:
    if all(isinstance(c, Dyadic) for c in phi.values()):
        sums, top = phase_sums(PeriodicRepresentation(n, dict(phi)))
        # reduce mod 2 exactly before going to float
        period = 2 << top
        return np.array([int(s) % period for s in sums], dtype=float) / (1 << top)
    pts = np.arange(1 << n)
    total = np.zeros(1 << n)
    for m, c in phi.items():
        total += float(c) * (1 - 2 * _parity(pts & m))
    return total


def _parity(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    out = np.zeros_like(a)
    while np.any(a):
        out ^= a & 1
        a >>= 1
    return out


def expected_values(family: RandomizedPhaseFamily) -> np.ndarray:
    """``E[cos(pi * phase_sum)]`` at every input index."""
    if family.n > MAX_VARS:
        raise ValueError(f"n must be <= {MAX_VARS}")
    out = np.zeros(1 << family.n)
    for w, phi in family.atoms:
        out += float(w) * np.cos(np.pi * _float_phase_sums(family.n, phi))
    return out


def _index(x: Sequence[int], n: int) -> int:
    if len(x) != n:
        raise ValueError(f"expected {n} coordinates, got {len(x)}")
    m = 0
    for i, xi in enumerate(x):
        if xi not in (1, -1):
            raise ValueError("coordinates must be +1 or -1")
        if xi == -1:
            m |= 1 << i
    return m


def expected_value(family: RandomizedPhaseFamily, x: Sequence[int]) -> float:
    """Value of the family at the ±1 point ``x``."""
    m = _index(x, family.n)
    total = 0.0
    for w, phi in family.atoms:
        theta = 0.0
        for s, c in phi.items():
            sign = -1 if bin(s & m).count("1") & 1 else 1
            theta += sign * float(c)
        total += float(w) * math.cos(math.pi * theta)
    return total


def _errors(family: RandomizedPhaseFamily, f: BooleanFunction) -> np.ndarray:
    if f.n != family.n:
        raise ValueError(f"arity mismatch: family on {family.n}, f on {f.n}")
    return np.abs(f.signs().astype(float) - expected_values(family))


def check_pointwise_error(family: RandomizedPhaseFamily, f: BooleanFunction, eps: float) -> bool:
    """``|f(x) - E cos| <= 2 eps`` at every input."""
    if not 0 <= eps < 0.5:
        raise ValueError("eps must lie in [0, 1/2)")
    return bool(np.all(_errors(family, f) <= 2 * eps + TOL))


def check_distribution_error(family: RandomizedPhaseFamily, f: BooleanFunction, mu, eps: float) -> bool:
    """``E_{x ~ mu} |f(x) - E cos| <= 2 eps``; ``mu`` is indexed like truth tables."""
    mu = np.asarray(mu, dtype=float)
    if mu.shape != (1 << family.n,):
        raise ValueError(f"mu must have {1 << family.n} entries")
    if np.any(mu < 0) or abs(mu.sum() - 1.0) > TOL:
        raise ValueError("mu must be a probability distribution")
    return bool(float(np.dot(mu, _errors(family, f))) <= 2 * eps + TOL)


# -- probabilistic polynomials ----------------------------------------------

@dataclass(frozen=True)
class PolynomialAtom:
    weight: float
    poly: AnfPolynomial
    ys: tuple  # y_0 .. y_ell of the phase atom this came from


@dataclass(frozen=True)
class ProbabilisticPolynomial:
    n: int
    atoms: tuple

    @property
    def degree(self) -> int:
        return max((a.poly.degree for a in self.atoms), default=0)


def _cos_half_turns(num: int, den_pow: int) -> float:
    """``cos(pi * num / 2**den_pow)``, exact at multiples of 1/2."""
    period = 2 << den_pow
    r = num % period
    if r == 0:
        return 1.0
    if r == period // 2:
        return -1.0
    if den_pow and r % (1 << (den_pow - 1)) == 0:
        return 0.0
    return math.cos(math.pi * r / (1 << den_pow))


def _phase_bits(phi: Mapping[int, Dyadic], ell: int):
    """Integer data ``(bar phi, k)`` with ``bar phi_S = 2**ell * phi_S``."""
    bar = {}
    for m, c in phi.items():
        v = c.scale_pow2(ell)
        if not v.is_integer():
            raise ValueError(f"phase {c} has more than {ell} binary digits")
        bar[m] = int(v)
    total = sum((c for c in phi.values()), Dyadic(0))
    k = total.scale_pow2(-1).ceil()
    return bar, k


def _ys_via_parities(n: int, bar: Mapping[int, int], k: int, ell: int) -> list[AnfPolynomial]:
    """ANF of each weight bit, interpolated over parity variables ``b_S``.

    ``N = k 2^(ell+1) - sum_S bar_S (1 - 2 b_S)`` is tabulated over all
    assignments of the ``b_S``; its bits are interpolated by a Moebius
    transform, then each ``b_S`` is replaced by ``XOR_{i in S} x_i``.
    """
    tset = sorted(m for m in bar if m)
    t = len(tset)
    if t > MAX_SUPPORT:
        raise ValueError(f"{t} parity variables exceeds the cap of {MAX_SUPPORT}")
    base = k * (2 << ell) - sum(bar.values())
    bvals = np.zeros(1 << t, dtype=np.int64) + base
    idx = np.arange(1 << t, dtype=np.int64)
    for j, m in enumerate(tset):
        bvals += 2 * bar[m] * ((idx >> j) & 1)
    if np.any(bvals < 0):
        raise AssertionError("shifted phase total went negative")
    # parity table of each b_S as a function of x
    xs = np.arange(1 << n, dtype=np.int64)
    par = [_parity(xs & m).astype(np.uint8) for m in tset]
    ys = []
    for i in range(ell + 1):
        coeffs = moebius_gf2(((bvals >> i) & 1).astype(np.uint8))
        table = np.zeros(1 << n, dtype=np.uint8)
        for mon in np.flatnonzero(coeffs):
            term = np.ones(1 << n, dtype=np.uint8)
            for j in range(t):
                if (int(mon) >> j) & 1:
                    term &= par[j]
            table ^= term
        ys.append(moebius(BooleanFunction(n, table)))
    return ys


def _ys_direct(n: int, phi: Mapping[int, Dyadic], k: int, ell: int) -> list[AnfPolynomial]:
    sums, top = phase_sums(PeriodicRepresentation(n, dict(phi)))
    vals = [k * (2 << ell) - (int(s) << ell >> top) for s in sums]
    return [moebius(BooleanFunction(n, np.array([(v >> i) & 1 for v in vals], dtype=np.uint8)))
            for i in range(ell + 1)]


def _threshold_atoms(n: int, ys: list[AnfPolynomial], ell: int, weight: float):
    """Split the uniform threshold ``Z`` into intervals of constant decision rule.

    Output 0 when ``(1 + cos(pi * sum_i 2^(i-ell) y_i)) / 2 > Z``.
    """
    ytabs = [y.to_function().table.astype(np.int64) for y in ys]
    code = np.zeros(1 << n, dtype=np.int64)
    for i, tab in enumerate(ytabs):
        code |= tab << i
    probs = {c: (1.0 + _cos_half_turns(c, ell)) / 2.0 for c in range(1 << (ell + 1))}
    cuts: list[float] = []
    for p in sorted(set(probs.values()) | {0.0, 1.0}):
        if not cuts or p - cuts[-1] > TOL:
            cuts.append(p)
    atoms = []
    for lo, hi in zip(cuts, cuts[1:]):
        zero = {c for c, p in probs.items() if p >= hi - TOL}
        table = (~np.isin(code, sorted(zero))).astype(np.uint8)
        atoms.append(PolynomialAtom(weight * (hi - lo), moebius(BooleanFunction(n, table)), tuple(ys)))
    return atoms


def theorem3_polynomial(source, ell: int | None = None, cross_check: bool = True) -> ProbabilisticPolynomial:
    """Probabilistic polynomial from a dyadic representation or family.

    Every atom is canonicalized first so all phases are nonnegative. ``ell``
    defaults to the largest number of binary digits over the atoms.
    """
    if isinstance(source, PeriodicRepresentation):
        source = RandomizedPhaseFamily.single(source)
    n = source.n
    canon = []
    for w, phi in source.atoms:
        if not all(isinstance(c, Dyadic) for c in phi.values()):
            raise ValueError("theorem3_polynomial needs dyadic phases")
        canon.append((w, canonicalize(PeriodicRepresentation(n, phi)).phi))
    if ell is None:
        ell = max((c.den_pow for _, phi in canon for c in phi.values()), default=0)
    atoms = []
    for w, phi in canon:
        bar, k = _phase_bits(phi, ell)
        ys = _ys_via_parities(n, bar, k, ell)
        if cross_check and ys != _ys_direct(n, phi, k, ell):
            raise AssertionError("parity-variable interpolation disagrees with direct evaluation")
        atoms.extend(_threshold_atoms(n, ys, ell, float(w)))
    return ProbabilisticPolynomial(n, tuple(atoms))


def polynomial_error(pp: ProbabilisticPolynomial, f: BooleanFunction) -> float:
    """Worst-case over inputs of the probability that the sampled polynomial errs."""
    if f.n != pp.n:
        raise ValueError(f"arity mismatch: polynomial on {pp.n}, f on {f.n}")
    err = np.zeros(1 << f.n)
    for a in pp.atoms:
        err += a.weight * (a.poly.to_function().table != f.table)
    return float(err.max()) if err.size else 0.0
