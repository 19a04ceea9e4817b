"""Exact Walsh-Hadamard spectra of Boolean functions (±1 convention)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._transforms import fwht, int_vector, popcount
from .core import MAX_VARS, BooleanFunction, as_mask, members
from .dyadic import Dyadic

__all__ = [
    "FourierSpectrum",
    "wht",
    "stats",
    "dimension",
    "gf2_rank",
    "mod3_closed_form",
    "reconstruct",
    "reconstruct_all",
]


@dataclass(frozen=True)
class FourierSpectrum:
    """Nonzero Fourier coefficients keyed by variable bitmask."""

    n: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for s, c in self.coeffs.items():
            c = c if isinstance(c, Dyadic) else Dyadic.from_fraction(Fraction(c))
            if c:
                clean[as_mask(s)] = c
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, s) -> Dyadic:
        return self.coeffs.get(as_mask(s), Dyadic(0))

    def __eq__(self, other):
        if not isinstance(other, FourierSpectrum):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    @property
    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def to_list(self) -> list[dict]:
        return [{"set": list(members(s)), "coeff": self.coeffs[s].to_dict()}
                for s in sorted(self.coeffs, key=lambda s: (popcount(s), members(s)))]

    @classmethod
    def from_list(cls, n: int, items: list[dict]) -> "FourierSpectrum":
        return cls(n, {as_mask(it["set"]): Dyadic.from_dict(it["coeff"]) for it in items})


def wht(f: BooleanFunction) -> FourierSpectrum:
    """Exact Fourier spectrum ``E[f(x) prod_{i in S} x_i]`` of ``f``."""
    if f.n > MAX_VARS:
        raise ValueError(f"n must be <= {MAX_VARS}")
    totals = fwht(f.signs())
    coeffs = {int(s): Dyadic(int(totals[s]), f.n) for s in np.flatnonzero(totals)}
    return FourierSpectrum(f.n, coeffs)


def stats(spec: FourierSpectrum) -> tuple[int, int, int]:
    """``(sparsity, nonempty sparsity, degree)`` of a spectrum."""
    sparsity = len(spec.coeffs)
    nonempty = sum(1 for s in spec.coeffs if s)
    degree = max((popcount(s) for s in spec.coeffs), default=0)
    return sparsity, nonempty, degree


def gf2_rank(vectors) -> int:
    """Rank over GF(2) of integer bit-vectors."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def dimension(spec: FourierSpectrum) -> int:
    """Fourier dimension: GF(2) rank of the support's indicator vectors."""
    return gf2_rank(spec.coeffs)


def mod3_closed_form(n: int) -> FourierSpectrum:
    """Spectrum of ``Mod^3_n`` from the cube-root-of-unity product formula.

    With ``w = (-1 + sqrt(-3)) / 2``, ``prod_i (-1 + x_i sqrt(-3)) / 2`` is
    ``w**weight``; a unit prefactor chosen by ``n mod 3`` rotates the
    weight-divisible-by-3 case onto real part 1. Expanding the product gives
    every coefficient in closed form.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    third = Fraction(1, 3)
    coeffs: dict[int, Fraction] = {}
    r = n % 3
    if r == 0:
        pref = Fraction((-1) ** (n + 1), 3 * 2 ** (n - 2))
        for s in range(1 << n):
            size = popcount(s)
            if size % 2 == 0:
                coeffs[s] = pref * (-3) ** (size // 2)
    else:
        pref = Fraction((-1) ** n, 3 * 2 ** (n - 1))
        for s in range(1 << n):
            size = popcount(s)
            term = (-1) ** (size // 2) * 3 ** ((size + 1) // 2)
            if r == 2 and size % 2 == 1:
                # conjugate prefactor flips the sign of the odd-size terms
                term = -term
            coeffs[s] = pref * term
    coeffs[0] = coeffs.get(0, Fraction(0)) + third
    return FourierSpectrum(n, {s: Dyadic.from_fraction(c) for s, c in coeffs.items()})


def reconstruct(spec: FourierSpectrum, x: Sequence[int]) -> Dyadic:
    """Evaluate the multilinear expansion at a ±1 point."""
    if len(x) != spec.n:
        raise ValueError(f"expected {spec.n} coordinates, got {len(x)}")
    neg = 0
    for i, xi in enumerate(x):
        if xi not in (1, -1):
            raise ValueError("coordinates must be +1 or -1")
        if xi == -1:
            neg |= 1 << i
    top = max((c.den_pow for c in spec.coeffs.values()), default=0)
    total = 0
    for s, c in spec.coeffs.items():
        v = c.num << (top - c.den_pow)
        total += -v if popcount(s & neg) & 1 else v
    return Dyadic(total, top)


def reconstruct_all(spec: FourierSpectrum) -> np.ndarray:
    """Exact values of the expansion at every input index, as integers when possible.

    Returns an object array of :class:`Dyadic` unless every value is integral,
    in which case an ``int64`` array (±1 for a Boolean spectrum).
    """
    n = spec.n
    top = max((c.den_pow for c in spec.coeffs.values()), default=0)
    scaled = [0] * (1 << n)
    for s, c in spec.coeffs.items():
        scaled[s] = c.num << (top - c.den_pow)
    sums = fwht(int_vector(scaled, n))
    unit = 1 << top
    if all(int(v) % unit == 0 for v in sums):
        return np.array([int(v) // unit for v in sums], dtype=np.int64)
    return np.array([Dyadic(int(v), top) for v in sums], dtype=object)
