"""Algebraic normal form over GF(2).

A polynomial is a set of monomials, each monomial a variable bitmask; the
empty mask 0 is the constant 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from ._transforms import moebius_gf2, popcount
from .core import MAX_VARS, BooleanFunction, as_mask, members

__all__ = [
    "AnfPolynomial",
    "moebius",
    "deg_f2",
    "eval_anf",
    "lsb_symmetric",
    "parse_anf",
    "format_anf",
    "multiply",
]


@dataclass(frozen=True)
class AnfPolynomial:
    n: int
    monomials: frozenset

    def __post_init__(self):
        mons = frozenset(as_mask(m) for m in self.monomials)
        if any(m >> self.n for m in mons):
            raise ValueError(f"monomial uses a variable outside [1, {self.n}]")
        object.__setattr__(self, "monomials", mons)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable) -> "AnfPolynomial":
        return cls(n, frozenset(as_mask(s) for s in sets))

    @property
    def degree(self) -> int:
        return deg_f2(self)

    def to_function(self) -> BooleanFunction:
        if self.n > MAX_VARS:
            raise ValueError(f"n must be <= {MAX_VARS}")
        coeffs = np.zeros(1 << self.n, dtype=np.uint8)
        for m in self.monomials:
            coeffs[m] = 1
        return BooleanFunction(self.n, moebius_gf2(coeffs))

    def __add__(self, other: "AnfPolynomial") -> "AnfPolynomial":
        return AnfPolynomial(max(self.n, other.n), self.monomials ^ other.monomials)

    def __mul__(self, other: "AnfPolynomial") -> "AnfPolynomial":
        return multiply(self, other)

    def __str__(self) -> str:
        return format_anf(self)


def moebius(f: BooleanFunction) -> AnfPolynomial:
    """ANF of ``f``: ``c_S`` is the XOR of ``f`` over inputs supported inside ``S``."""
    coeffs = moebius_gf2(f.table)
    return AnfPolynomial(f.n, frozenset(int(m) for m in np.flatnonzero(coeffs)))


def deg_f2(p: AnfPolynomial) -> int:
    return max((popcount(m) for m in p.monomials), default=0)


def eval_anf(p: AnfPolynomial, bits: Sequence[int]) -> int:
    if len(bits) != p.n:
        raise ValueError(f"expected {p.n} input bits, got {len(bits)}")
    support = 0
    for i, b in enumerate(bits):
        if b:
            support |= 1 << i
    return sum(1 for m in p.monomials if m & support == m) & 1


def multiply(p: AnfPolynomial, q: AnfPolynomial) -> AnfPolynomial:
    """Product in the Boolean ring (``x_i**2 == x_i``)."""
    out: set[int] = set()
    for a in p.monomials:
        for b in q.monomials:
            out ^= {a | b}
    return AnfPolynomial(max(p.n, q.n), frozenset(out))


def lsb_symmetric(ell: int, n: int) -> AnfPolynomial:
    """The elementary symmetric polynomial of degree ``2**(ell-1)`` over GF(2).

    Evaluated at ``x`` it gives bit ``ell`` (1 = least significant) of the
    Hamming weight of ``x``.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    size = 1 << (ell - 1)
    mons = frozenset(sum(1 << i for i in c) for c in combinations(range(n), size))
    return AnfPolynomial(n, mons)


_TERM = re.compile(r"(?:x(\d+))+")
_VAR = re.compile(r"x(\d+)")


def parse_anf(text: str, n: int) -> AnfPolynomial:
    """Parse ``"x1x2+x3"`` (``+`` or ``⊕`` separated); ``1`` is the constant term."""
    text = text.replace("⊕", "+").replace(" ", "")
    if text in ("", "0"):
        return AnfPolynomial(n, frozenset())
    mons: set[int] = set()
    for term in text.split("+"):
        if term == "1":
            m = 0
        elif term == "0":
            continue
        elif _TERM.fullmatch(term):
            idx = [int(v) for v in _VAR.findall(term)]
            if any(not 1 <= i <= n for i in idx):
                raise ValueError(f"variable out of range in {term!r}")
            m = as_mask(idx)
        else:
            raise ValueError(f"cannot parse monomial {term!r}")
        mons ^= {m}
    return AnfPolynomial(n, frozenset(mons))


def format_anf(p: AnfPolynomial) -> str:
    if not p.monomials:
        return "0"
    terms = []
    for m in sorted(p.monomials, key=lambda m: (popcount(m), members(m))):
        terms.append("1" if m == 0 else "".join(f"x{i}" for i in members(m)))
    return "+".join(terms)
