"""Periodic Fourier representations ``f(x) = cos(pi * sum_S phi_S x^S)``.

A representation is a map from variable bitmasks to dyadic phases. It
represents the Boolean function whose bit at ``x`` is the parity of the
(integral) phase sum; any non-integral phase sum means it represents nothing.

Canonical form keeps every nonempty phase in ``[0, 1)`` and the constant
phase in ``[0, 2)``. Integer parts move into the constant because
``(m + r) x^S`` and ``m + r x^S`` differ by an even integer.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from ._transforms import fwht, int_vector, popcount, subset_sum, superset_sum
from .anf import deg_f2, moebius
from .core import BooleanFunction, as_mask, members
from .dyadic import Dyadic, as_dyadic, reduce_mod
from .fourier import dimension, wht

__all__ = [
    "PeriodicRepresentation",
    "VerificationReport",
    "NotARepresentation",
    "SearchBudgetExceeded",
    "canonicalize",
    "phase_sum",
    "phase_sums",
    "represented_function",
    "verify",
    "stats",
    "from_fourier",
    "from_anf",
    "from_mod4",
    "mod4_function",
    "parity_rep",
    "and_combine",
    "xor_combine",
    "lower_bound",
    "lower_bounds",
    "brute_force_pfs",
    "cq_recipe",
    "c3_recipe",
]


class NotARepresentation(ValueError):
    """The phase polynomial is not integral everywhere."""


class SearchBudgetExceeded(RuntimeError):
    """The brute-force search ran out of time before deciding."""

    def __init__(self, msg: str, searched_up_to: int):
        super().__init__(msg)
        self.searched_up_to = searched_up_to


@dataclass(frozen=True)
class PeriodicRepresentation:
    n: int
    phi: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for s, c in dict(self.phi).items():
            m = as_mask(s)
            if m >> self.n:
                raise ValueError(f"monomial {members(m)} outside [1, {self.n}]")
            c = as_dyadic(c)
            if c:
                clean[m] = clean.get(m, Dyadic(0)) + c
        object.__setattr__(self, "phi", {m: c for m, c in clean.items() if c})

    def __getitem__(self, s) -> Dyadic:
        return self.phi.get(as_mask(s), Dyadic(0))

    def __eq__(self, other):
        if not isinstance(other, PeriodicRepresentation):
            return NotImplemented
        return self.n == other.n and self.phi == other.phi

    def __hash__(self):
        return hash((self.n, frozenset(self.phi.items())))

    @property
    def constant(self) -> Dyadic:
        return self.phi.get(0, Dyadic(0))

    @property
    def monomials(self) -> list[int]:
        """Nonempty monomials with nonzero phase, in mask order."""
        return sorted(m for m in self.phi if m)

    @property
    def sparsity(self) -> int:
        return stats(self)[0]

    @property
    def digits(self) -> int:
        return stats(self)[1]

    def is_canonical(self) -> bool:
        return all(
            (Dyadic(0) <= c < 2) if m == 0 else (Dyadic(0) <= c < 1)
            for m, c in self.phi.items()
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "phi": [{"set": list(members(m)), "coeff": self.phi[m].to_dict()}
                    for m in sorted(self.phi, key=lambda m: (popcount(m), members(m)))],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PeriodicRepresentation":
        phi: dict[int, Dyadic] = {}
        for item in d["phi"]:
            m = as_mask(item["set"])
            phi[m] = phi.get(m, Dyadic(0)) + _coeff_from_json(item["coeff"])
        return cls(int(d["n"]), phi)

    def __str__(self) -> str:
        terms = []
        for m in sorted(self.phi, key=lambda m: (popcount(m), members(m))):
            mon = "".join(f"x{i}" for i in members(m)) or "1"
            terms.append(f"{self.phi[m]}*{mon}")
        return " + ".join(terms) or "0"


def _coeff_from_json(c) -> Dyadic:
    if isinstance(c, dict):
        return Dyadic.from_dict(c)
    if isinstance(c, str):
        return as_dyadic(c)
    if isinstance(c, int):
        return Dyadic(c)
    raise ValueError(f"cannot read coefficient {c!r} exactly")


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    witness: tuple | None
    sparsity: int
    digits: int
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "witness": list(self.witness) if self.witness is not None else None,
            "sparsity": self.sparsity,
            "digits": self.digits,
            "reason": self.reason,
        }


# -- basic operations -------------------------------------------------------

def canonicalize(rep: PeriodicRepresentation) -> PeriodicRepresentation:
    carry_total = 0
    phi: dict[int, Dyadic] = {}
    for m, c in rep.phi.items():
        if m == 0:
            continue
        residue, carry = reduce_mod(c, 1)
        carry_total += carry
        if residue:
            phi[m] = residue
    const, _ = reduce_mod(rep.constant + carry_total, 2)
    if const:
        phi[0] = const
    return PeriodicRepresentation(rep.n, phi)


def _signs_of(x: Sequence[int], n: int) -> int:
    if len(x) != n:
        raise ValueError(f"expected {n} coordinates, got {len(x)}")
    neg = 0
    for i, xi in enumerate(x):
        if xi not in (1, -1):
            raise ValueError("coordinates must be +1 or -1")
        if xi == -1:
            neg |= 1 << i
    return neg


def phase_sum(rep: PeriodicRepresentation, x: Sequence[int]) -> Dyadic:
    """``sum_S phi_S prod_{i in S} x_i`` at a ±1 point, exactly."""
    neg = _signs_of(x, rep.n)
    total = Dyadic(0)
    for m, c in rep.phi.items():
        total = total - c if popcount(m & neg) & 1 else total + c
    return total


def phase_sums(rep: PeriodicRepresentation) -> tuple[np.ndarray, int]:
    """Phase sums at every input, as ``(numerators, D)`` meaning ``numerators / 2**D``.

    Entry ``m`` corresponds to the {0,1} input with index ``m``.
    """
    top = max((c.den_pow for c in rep.phi.values()), default=0)
    scaled = [0] * (1 << rep.n)
    for m, c in rep.phi.items():
        scaled[m] = c.num << (top - c.den_pow)
    return fwht(int_vector(scaled, rep.n)), top


def _index_to_signs(m: int, n: int) -> tuple[int, ...]:
    return tuple(-1 if (m >> i) & 1 else 1 for i in range(n))


def represented_function(rep: PeriodicRepresentation) -> BooleanFunction:
    """The Boolean function ``rep`` represents; raises if some phase sum is fractional."""
    sums, top = phase_sums(rep)
    unit = 1 << top
    rem = sums % unit
    bad = np.flatnonzero(rem != 0)
    if bad.size:
        m = int(bad[0])
        raise NotARepresentation(
            f"phase sum at x={_index_to_signs(m, rep.n)} is not an integer")
    bits = (sums // unit) % 2
    return BooleanFunction(rep.n, np.array([int(b) for b in bits], dtype=np.uint8))


def stats(rep: PeriodicRepresentation) -> tuple[int, int]:
    """``(sparsity, digits)`` of the canonical form of ``rep``."""
    canon = canonicalize(rep)
    sparsity = sum(1 for m in canon.phi if m)
    digits = max((c.den_pow for c in canon.phi.values()), default=0)
    return sparsity, digits


def verify(rep: PeriodicRepresentation, f: BooleanFunction) -> VerificationReport:
    """Check ``f = cos(pi * phase)`` exactly: phase integral with parity ``f``."""
    sparsity, digits = stats(rep)
    if rep.n != f.n:
        return VerificationReport(False, None, sparsity, digits,
                                  f"arity mismatch: rep on {rep.n}, f on {f.n}")
    sums, top = phase_sums(rep)
    unit = 1 << top
    fractional = (sums % unit) != 0
    wrong = ((sums // unit) % 2).astype(np.int64) != f.table
    bad = np.flatnonzero(fractional | wrong)
    if bad.size:
        m = int(bad[0])
        reason = "phase sum is not an integer" if fractional[m] else "phase parity disagrees with f"
        return VerificationReport(False, _index_to_signs(m, rep.n), sparsity, digits, reason)
    return VerificationReport(True, None, sparsity, digits)


# -- constructions ------------------------------------------------------------

def from_fourier(f: BooleanFunction, raw: bool = False) -> PeriodicRepresentation:
    """Halve the Fourier expansion and shift by 1/2 (``sin(pi t) = cos(pi (t - 1/2))``)."""
    phi = {s: c.scale_pow2(-1) for s, c in wht(f).coeffs.items()}
    phi[0] = phi.get(0, Dyadic(0)) - Dyadic(1, 1)
    rep = PeriodicRepresentation(f.n, phi)
    return rep if raw else canonicalize(rep)


def from_anf(f: BooleanFunction, raw: bool = False) -> PeriodicRepresentation:
    """Substitute ``x_i -> (1 - x_i)/2`` into the ANF of ``f``, read mod 2.

    ``phi_S = (-1)^|S| sum_{T ⊇ S} c_T / 2^|T|``.
    """
    n = f.n
    anf = moebius(f)
    weights = [0] * (1 << n)
    for t in anf.monomials:
        weights[t] = 1 << (n - popcount(t))
    sums = superset_sum(int_vector(weights, n))
    phi = {}
    for s in range(1 << n):
        v = int(sums[s])
        if v:
            phi[s] = Dyadic(-v if popcount(s) & 1 else v, n)
    rep = PeriodicRepresentation(n, phi)
    return rep if raw else canonicalize(rep)


def _mod4_table(n: int, c: Mapping) -> np.ndarray:
    vals = [0] * (1 << n)
    for s, cs in c.items():
        cs = int(cs)
        if not 0 <= cs <= 3:
            raise ValueError(f"integer coefficients must be in {{0,1,2,3}}, got {cs}")
        vals[as_mask(s)] += cs
    # evaluate sum_S c_S prod_{i in S} x_i at every input
    return subset_sum(np.array(vals, dtype=np.int64))


def mod4_function(n: int, c: Mapping) -> BooleanFunction:
    """The function ``LSB^2(sum_S c_S prod_{i in S} x_i)`` over {0,1} inputs."""
    values = _mod4_table(n, c)
    return BooleanFunction(n, ((values >> 1) & 1).astype(np.uint8))


def from_mod4(n: int, c: Mapping, raw: bool = False) -> PeriodicRepresentation:
    """Representation of ``LSB^2`` of a nonnegative integer polynomial.

    With ``F = sum c_S x^S`` and ``g = F mod 2`` the phase is
    ``(F - g) / 2``, which is ``LSB^2(F)`` mod 2; ``g`` is written through its
    own Fourier expansion, ``g = (1 - sum ghat(S) x^S) / 2``.
    """
    values = _mod4_table(n, c)
    g = BooleanFunction(n, (values & 1).astype(np.uint8))
    phi: dict[int, Dyadic] = {}

    def add(m: int, v: Dyadic) -> None:
        phi[m] = phi.get(m, Dyadic(0)) + v

    # (1/2) * c_S * prod_{i in S} (1 - x_i)/2
    for s, cs in c.items():
        s = as_mask(s)
        cs = int(cs)
        if not cs:
            continue
        size = popcount(s)
        sub = s
        while True:
            sign = -1 if popcount(sub) & 1 else 1
            add(sub, Dyadic(sign * cs, size + 1))
            if sub == 0:
                break
            sub = (sub - 1) & s
    # -(1/2) * (1 - ghat(x)) / 2
    add(0, Dyadic(-1, 2))
    for s, gc in wht(g).coeffs.items():
        add(s, gc.scale_pow2(-2))
    rep = PeriodicRepresentation(n, phi)
    return rep if raw else canonicalize(rep)


def parity_rep(n: int, s) -> PeriodicRepresentation:
    """``(1 - x^S) / 2``: the phase equal to the parity of the bits in ``S``."""
    m = as_mask(s)
    return PeriodicRepresentation(n, {0: Dyadic(1, 1), m: Dyadic(-1, 1)})


def _require_same_n(reps: Sequence[PeriodicRepresentation]) -> int:
    if not reps:
        raise ValueError("need at least one representation")
    n = reps[0].n
    if any(r.n != n for r in reps):
        raise ValueError("representations must share the variable count")
    for r in reps:
        represented_function(r)
    return n


def _multiply(a: Mapping[int, Dyadic], b: Mapping[int, Dyadic]) -> dict[int, Dyadic]:
    out: dict[int, Dyadic] = {}
    for s, cs in a.items():
        for t, ct in b.items():
            m = s ^ t
            out[m] = out.get(m, Dyadic(0)) + cs * ct
    return {m: c for m, c in out.items() if c}


def and_combine(reps: Sequence[PeriodicRepresentation]) -> PeriodicRepresentation:
    """AND of represented functions: multiply the phase polynomials.

    A product of integers is odd exactly when every factor is odd. The inputs
    are multiplied as given (not canonicalized first), so the result depends
    on which representatives are passed in.
    """
    n = _require_same_n(reps)
    phi: dict[int, Dyadic] = dict(reps[0].phi)
    for r in reps[1:]:
        phi = _multiply(phi, r.phi)
    return canonicalize(PeriodicRepresentation(n, phi))


def xor_combine(reps: Sequence[PeriodicRepresentation]) -> PeriodicRepresentation:
    """XOR of represented functions: add the phase polynomials."""
    n = _require_same_n(reps)
    phi: dict[int, Dyadic] = {}
    for r in reps:
        for m, c in r.phi.items():
            phi[m] = phi.get(m, Dyadic(0)) + c
    return canonicalize(PeriodicRepresentation(n, phi))


def cq_recipe(n: int, raw: bool = False) -> PeriodicRepresentation:
    """CQ_n as the second bit of the weight: sparsity n + 1, two binary digits."""
    return from_mod4(n, {1 << i: 1 for i in range(n)}, raw=raw)


def c3_recipe(n: int) -> PeriodicRepresentation:
    """C^3_n = CQ_n AND XOR_n, multiplying the raw CQ phase by ``(1 - x^[n]) / 2``."""
    return and_combine([cq_recipe(n, raw=True), parity_rep(n, (1 << n) - 1)])


# -- lower bounds ---------------------------------------------------------------

def lower_bounds(f: BooleanFunction) -> dict[str, int]:
    """Every applicable lower bound on the periodic Fourier sparsity of ``f``."""
    if f.is_constant():
        raise ValueError("lower bounds are stated for nonconstant functions")
    deg = deg_f2(moebius(f))
    dim = dimension(wht(f))
    out = {"degree": (1 << deg) - 1, "dimension": dim}
    if deg >= 2:
        out["dimension_plus_one"] = dim + 1
    return out


def lower_bound(f: BooleanFunction) -> int:
    return max(lower_bounds(f).values())


# -- exhaustive search -------------------------------------------------------

_CHUNK = 1 << 16


def brute_force_pfs(
    f: BooleanFunction,
    s_max: int | None = None,
    time_budget: float | None = None,
    max_n: int = 3,
) -> tuple[int, PeriodicRepresentation] | None:
    """Smallest sparsity of any exact representation of ``f``, by enumeration.

    For sparsity ``s`` every phase can be taken in ``R_k`` with
    ``k = floor(log2(s + 1))``, and after canonicalization nonempty phases in
    ``{1, ..., 2^k - 1} / 2^k``. Supports are tried in increasing size, then
    lexicographic mask order, and phase vectors in :func:`itertools.product`
    order; the constant phase is forced by the all-zeros input. Returns
    ``None`` when nothing with sparsity ``<= s_max`` exists; raises
    :class:`SearchBudgetExceeded` if ``time_budget`` seconds run out first.
    """
    n = f.n
    if n > max_n:
        raise ValueError(f"exhaustive search is capped at n <= {max_n}")
    if s_max is None:
        s_max = (1 << n) - 1
    deadline = None if time_budget is None else time.monotonic() + time_budget
    bits = f.table.astype(np.int64)
    if f.is_constant():
        return 0, PeriodicRepresentation(n, {0: int(bits[0])})

    idx = np.arange(1 << n)
    nonempty = list(range(1, 1 << n))
    for s in range(1, min(s_max, len(nonempty)) + 1):
        k = int(math.floor(math.log2(s + 1)))
        mod = 1 << (k + 1)
        target = ((bits - bits[0]) << k) % mod
        grid = np.arange(1, 1 << k, dtype=np.int64)
        if grid.size == 0:
            continue
        for support in itertools.combinations(nonempty, s):
            if deadline is not None and time.monotonic() > deadline:
                raise SearchBudgetExceeded(
                    f"time budget exhausted while searching sparsity {s}", s - 1)
            # chi[j, m] = (-1)^{|S_j & m|}
            chi = np.array([[-1 if popcount(t & m) & 1 else 1 for m in idx] for t in support],
                           dtype=np.int64)
            diff = chi - chi[:, :1]
            found = _search_support(diff, grid, target, mod, s)
            if found is not None:
                coeffs = found
                const = ((int(bits[0]) << k) - int(np.dot(coeffs, chi[:, 0]))) % mod
                phi = {t: Dyadic(int(a), k) for t, a in zip(support, coeffs)}
                phi[0] = Dyadic(const, k)
                return s, canonicalize(PeriodicRepresentation(n, phi))
    return None


def _search_support(diff, grid, target, mod, s):
    total = grid.size ** s
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        flat = np.arange(start, stop, dtype=np.int64)
        coeffs = np.empty((stop - start, s), dtype=np.int64)
        for j in range(s - 1, -1, -1):
            coeffs[:, j] = grid[flat % grid.size]
            flat //= grid.size
        vals = (coeffs @ diff) % mod
        ok = np.all(vals == target, axis=1)
        hit = np.flatnonzero(ok)
        if hit.size:
            return coeffs[hit[0]]
    return None
