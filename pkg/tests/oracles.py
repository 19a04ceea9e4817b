"""Slow, obviously-correct reference implementations used only by the tests.

Everything here works point by point with Fractions and Python ints; none
of it touches the butterflies or bit tricks in the library.
"""

from fractions import Fraction
from itertools import combinations, product
import math


def points(n):
    """All {0,1} inputs as tuples, x1 first, in truth-table index order."""
    return [tuple((m >> i) & 1 for i in range(n)) for m in range(1 << n)]


def subsets(n):
    return [frozenset(c) for r in range(n + 1) for c in combinations(range(1, n + 1), r)]


def to_mask(s):
    return sum(1 << (i - 1) for i in s)


def chi(s, bits):
    """prod_{i in S} x_i in the ±1 view (x = 1 - 2 bit)."""
    return (-1) ** sum(bits[i - 1] for i in s)


def fourier(fn, n):
    """{mask: Fraction} by the defining average, E[f(x) chi_S(x)]."""
    pts = points(n)
    out = {}
    for s in subsets(n):
        c = Fraction(sum((-1) ** fn(b) * chi(s, b) for b in pts), 1 << n)
        if c:
            out[to_mask(s)] = c
    return out


def anf(fn, n):
    """Monomial masks with c_S = XOR of f over inputs supported inside S."""
    out = set()
    for s in subsets(n):
        total = 0
        for r in range(len(s) + 1):
            for t in combinations(sorted(s), r):
                bits = tuple(1 if i + 1 in t else 0 for i in range(n))
                total ^= fn(bits)
        if total:
            out.add(to_mask(s))
    return out


def anf_degree(fn, n):
    return max((bin(m).count("1") for m in anf(fn, n)), default=0)


def gf2_rank(masks):
    rows = list(masks)
    rank = 0
    for bit in range(64):
        pivot = next((r for r in rows if (r >> bit) & 1), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        rows = [r ^ pivot if (r >> bit) & 1 else r for r in rows]
        rank += 1
    return rank


def phase_at(phi, bits):
    """sum_S phi_S chi_S(x) as a Fraction; ``phi`` maps masks to Fraction-likes."""
    total = Fraction(0)
    for m, c in phi.items():
        s = [i + 1 for i in range(len(bits)) if (m >> i) & 1]
        total += Fraction(c.num, 1 << c.den_pow) * chi(s, bits) if hasattr(c, "num") \
            else Fraction(c) * chi(s, bits)
    return total


def represents(phi, fn, n):
    for b in points(n):
        t = phase_at(phi, b)
        if t.denominator != 1 or t.numerator % 2 != fn(b):
            return False
    return True


def weight(bits):
    return sum(bits)


def classical_bias(zs, hs, mus):
    """Best over all 4^k deterministic local strategies, enumerated as functions."""
    k = len(zs[0])
    best = None
    for strat in product(range(4), repeat=k):
        total = Fraction(0)
        for z, h, w in zip(zs, hs, mus):
            prod = 1
            for a, zi in zip(strat, z):
                prod *= {0: 1, 1: -1, 2: zi, 3: -zi}[a]
            total += Fraction(w) * h * prod
        best = total if best is None or total > best else best
    return best


def ghz_bias(zs, hs, mus, phases):
    return sum(float(w) * h * math.cos(math.pi * (float(phases[0]) + sum(float(p) * z for p, z in zip(phases[1:], zz))))
               for zz, h, w in zip(zs, hs, mus))
