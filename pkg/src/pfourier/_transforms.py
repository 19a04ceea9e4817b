"""In-place style butterflies over length-2**n vectors.

All transforms return new arrays and keep the input dtype, so they are exact
for ``int64`` (when no overflow is possible) and for ``object`` arrays of
Python ints / Fractions.
"""

from __future__ import annotations

import numpy as np

_INT64_SAFE = 1 << 62


def log2_len(v) -> int:
    size = len(v)
    n = size.bit_length() - 1
    if size != 1 << n:
        raise ValueError(f"length {size} is not a power of two")
    return n


def fwht(v: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform: ``out[m] = sum_S v[S] (-1)^|S & m|``."""
    a = np.array(v, copy=True)
    n = log2_len(a)
    for i in range(n):
        h = 1 << i
        a = a.reshape(-1, 2, h)
        lo = a[:, 0, :].copy()
        hi = a[:, 1, :]
        a[:, 0, :] = lo + hi
        a[:, 1, :] = lo - hi
    return a.reshape(-1)


def moebius_gf2(v: np.ndarray) -> np.ndarray:
    """Subset-XOR transform; it is an involution."""
    a = np.array(v, dtype=np.uint8, copy=True)
    n = log2_len(a)
    for i in range(n):
        h = 1 << i
        a = a.reshape(-1, 2, h)
        a[:, 1, :] ^= a[:, 0, :]
    return a.reshape(-1)


def subset_sum(v: np.ndarray) -> np.ndarray:
    """``out[m] = sum over S subset of m of v[S]`` (zeta transform)."""
    a = np.array(v, copy=True)
    n = log2_len(a)
    for i in range(n):
        h = 1 << i
        a = a.reshape(-1, 2, h)
        a[:, 1, :] += a[:, 0, :]
    return a.reshape(-1)


def superset_sum(v: np.ndarray) -> np.ndarray:
    """``out[S] = sum over T superset of S of v[T]``."""
    a = np.array(v, copy=True)
    n = log2_len(a)
    for i in range(n):
        h = 1 << i
        a = a.reshape(-1, 2, h)
        a[:, 0, :] += a[:, 1, :]
    return a.reshape(-1)


def int_vector(values, n: int) -> np.ndarray:
    """Pack Python ints into an array that a length-2**n WHT cannot overflow."""
    values = list(values)
    bound = max((abs(int(x)) for x in values), default=0) << n
    dtype = np.int64 if bound < _INT64_SAFE else object
    return np.array(values, dtype=dtype)


def popcounts(n: int) -> np.ndarray:
    """Hamming weight of every index ``0 .. 2**n - 1``."""
    idx = np.arange(1 << n, dtype=np.int64)
    w = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        w += (idx >> i) & 1
    return w


def popcount(m: int) -> int:
    return bin(m).count("1")
