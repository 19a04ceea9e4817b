"""XOR games, GHZ phase strategies, and single-layer NMQC protocols.

For a k-player XOR game with predicate ``h`` and input distribution ``mu``
on ``{+1,-1}^k``, the quantum bias reachable with a GHZ state and phase
measurements is the maximum over ``phi_0 .. phi_k`` of::

    sum_z mu(z) h(z) cos(pi * (phi_0 + sum_i phi_i z_i))

Phases are in units of pi throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._transforms import fwht, popcounts
from .core import BooleanFunction, as_mask, make_family, members
from .dyadic import Dyadic
from .periodic import PeriodicRepresentation, canonicalize, represented_function

__all__ = [
    "XorGame",
    "NmqcProtocol",
    "OutputDistribution",
    "OptimizerConfig",
    "quantum_bias",
    "optimize_bias",
    "classical_bias",
    "classical_bias_bruteforce",
    "game_from_function",
    "promise_mod_game",
    "protocol_from_rep",
    "simulate",
    "measurement_angles",
    "check_distributive_identity",
]

MU_TOL = 1e-12


@dataclass(frozen=True)
class XorGame:
    """Predicate ``h`` and weights ``mu`` over the listed ±1 inputs ``z``.

    Inputs not listed are outside the promise; the predicate is undefined there.
    """

    k: int
    z: tuple
    h: tuple
    mu: tuple

    def __post_init__(self):
        z = tuple(tuple(int(v) for v in zz) for zz in self.z)
        h = tuple(int(v) for v in self.h)
        mu = tuple(self.mu)
        if not (len(z) == len(h) == len(mu)):
            raise ValueError("z, h and mu must have equal length")
        if any(len(zz) != self.k for zz in z):
            raise ValueError(f"every input must have {self.k} coordinates")
        if any(v not in (1, -1) for zz in z for v in zz):
            raise ValueError("inputs must be ±1 vectors")
        if any(v not in (1, -1) for v in h):
            raise ValueError("predicate values must be ±1")
        if len(set(z)) != len(z):
            raise ValueError("duplicate input in game")
        if any(w < 0 for w in mu):
            raise ValueError("mu must be nonnegative")
        total = sum(mu)
        if isinstance(total, (int, Fraction)) and not isinstance(total, bool):
            if total != 1:
                raise ValueError(f"mu sums to {total}, not 1")
        elif abs(float(total) - 1.0) > MU_TOL:
            raise ValueError(f"mu sums to {total}, not 1")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "mu", mu)

    def signed_weights(self) -> np.ndarray:
        return np.array([float(w) * hh for w, hh in zip(self.mu, self.h)])

    def z_matrix(self) -> np.ndarray:
        return np.array(self.z, dtype=float).reshape(len(self.z), self.k)

    def to_dict(self) -> dict:
        def num(w):
            if isinstance(w, Fraction):
                return float(w) if w.denominator != 1 else int(w)
            return w

        return {"k": self.k,
                "entries": [{"z": list(zz), "h": hh, "mu": num(w)}
                            for zz, hh, w in zip(self.z, self.h, self.mu)]}

    @classmethod
    def from_dict(cls, d: dict) -> "XorGame":
        es = d["entries"]
        return cls(int(d["k"]), tuple(tuple(e["z"]) for e in es),
                   tuple(e["h"] for e in es), tuple(e["mu"] for e in es))


def game_from_function(h: BooleanFunction, mu=None) -> XorGame:
    """Total game for ``h`` (read through its ±1 view); uniform ``mu`` by default."""
    k = h.n
    size = 1 << k
    zs = tuple(tuple(-1 if (m >> i) & 1 else 1 for i in range(k)) for m in range(size))
    hs = tuple(int(v) for v in h.signs())
    if mu is None:
        mu = (Fraction(1, size),) * size
    return XorGame(k, zs, hs, tuple(mu))


def _as_float_phases(phases: Sequence) -> np.ndarray:
    return np.array([float(p) for p in phases], dtype=float)


def quantum_bias(game: XorGame, phases: Sequence) -> float:
    """Bias of the GHZ phase strategy ``phases = (phi_0, phi_1, ..., phi_k)``."""
    if len(phases) != game.k + 1:
        raise ValueError(f"expected {game.k + 1} phases, got {len(phases)}")
    ph = _as_float_phases(phases)
    args = ph[0] + game.z_matrix() @ ph[1:]
    return float(np.dot(game.signed_weights(), np.cos(np.pi * args)))


@dataclass
class OptimizerConfig:
    restarts: int = 32
    max_iters: int = 1000
    tol: float = 1e-12
    seed: int = 0


def _coordinate_pass(wz: np.ndarray, zmat: np.ndarray, ph: np.ndarray) -> float:
    """Maximize over each phase in turn, holding the others fixed.

    With the others fixed the objective is ``A cos(pi t) + B sin(pi t)`` in the
    phase ``t``, so the exact maximizer is ``atan2(B, A) / pi``.
    """
    k = zmat.shape[1]
    full = np.hstack([np.ones((zmat.shape[0], 1)), zmat])
    for i in range(k + 1):
        col = full[:, i]
        rest = ph[0] + zmat @ ph[1:] - ph[i] * col
        # cos(pi (rest + t c)) = cos(pi rest) cos(pi t) - c sin(pi rest) sin(pi t)
        a = float(np.dot(wz, np.cos(np.pi * rest)))
        b = float(np.dot(wz, -col * np.sin(np.pi * rest)))
        if a == 0.0 and b == 0.0:
            continue
        ph[i] = math.atan2(b, a) / math.pi
    args = ph[0] + zmat @ ph[1:]
    return float(np.dot(wz, np.cos(np.pi * args)))


def optimize_bias(game: XorGame, config: OptimizerConfig | None = None) -> tuple[np.ndarray, float]:
    """Multi-start coordinate ascent on the GHZ bias.

    The first start is all-zero phases; the rest are uniform in ``[-1, 1)``.
    Returns the best phases found and their bias, which is therefore a
    certified lower bound on the optimum.
    """
    cfg = config or OptimizerConfig()
    rng = np.random.default_rng(cfg.seed)
    wz = game.signed_weights()
    zmat = game.z_matrix()
    best_ph = np.zeros(game.k + 1)
    best = quantum_bias(game, best_ph)
    for r in range(max(1, cfg.restarts)):
        ph = np.zeros(game.k + 1) if r == 0 else rng.uniform(-1.0, 1.0, game.k + 1)
        val = float(np.dot(wz, np.cos(np.pi * (ph[0] + zmat @ ph[1:]))))
        for _ in range(cfg.max_iters):
            new = _coordinate_pass(wz, zmat, ph)
            if new - val < cfg.tol:
                val = max(val, new)
                break
            val = new
        if val > best + cfg.tol:
            best, best_ph = val, ph.copy()
    return best_ph, best


def classical_bias(game: XorGame):
    """Best bias of deterministic local strategies ``a_i: {±1} -> {±1}``.

    Each ``a_i`` is ``s_i`` or ``s_i * z_i``, so a product strategy is a signed
    character ``± prod_{i in T} z_i``; the optimum is the largest absolute
    correlation of ``mu * h`` with a character. Exact when ``mu`` is exact.
    """
    k = game.k
    if k > 20:
        raise ValueError("classical bias enumeration is capped at k <= 20")
    exact = all(isinstance(w, (int, Fraction)) for w in game.mu)
    table = np.zeros(1 << k, dtype=object if exact else float)
    if exact:
        table[:] = 0
    for zz, hh, w in zip(game.z, game.h, game.mu):
        m = sum(1 << i for i, v in enumerate(zz) if v == -1)
        table[m] = table[m] + (Fraction(w) if exact else float(w)) * hh
    corr = fwht(table)
    return max(abs(c) for c in corr)


def classical_bias_bruteforce(game: XorGame):
    """Enumerate all ``4**k`` deterministic strategies directly (small k only)."""
    k = game.k
    if k > 8:
        raise ValueError("direct strategy enumeration is capped at k <= 8")
    # strategy code per player: 0 -> +1, 1 -> -1, 2 -> z, 3 -> -z
    best = None
    for code in range(4 ** k):
        total = 0
        for zz, hh, w in zip(game.z, game.h, game.mu):
            prod = 1
            c = code
            for v in zz:
                a = (1, -1, v, -v)[c & 3]
                prod *= a
                c >>= 2
            total += w * hh * prod
        if best is None or total > best:
            best = total
    return best


def promise_mod_game(k: int, n: int) -> tuple[XorGame, list]:
    """``P^k_n``: +1 when the weight is 0 mod 2k, -1 when it is k mod 2k.

    Returns the game (uniform over the promise) and the phase vector of
    ``cos(pi/k * sum_i (1 - x_i)/2)``, i.e. ``phi_0 = n/(2k)`` and
    ``phi_i = -1/(2k)``. Phases are :class:`Dyadic` when ``k`` is a power of
    two and floats otherwise.
    """
    if k < 2 or n < k:
        raise ValueError("need k >= 2 and n >= k")
    zs, hs = [], []
    for m in range(1 << n):
        w = bin(m).count("1") % (2 * k)
        if w in (0, k):
            zs.append(tuple(-1 if (m >> i) & 1 else 1 for i in range(n)))
            hs.append(1 if w == 0 else -1)
    if not zs:
        raise ValueError("empty promise set")
    mu = (Fraction(1, len(zs)),) * len(zs)
    game = XorGame(n, tuple(zs), tuple(hs), mu)
    if k & (k - 1) == 0:
        step = Dyadic(1, k.bit_length())  # 1 / (2k)
        phases = [step * n] + [-step] * n
    else:
        phases = [n / (2 * k)] + [-1 / (2 * k)] * n
    return game, phases


# -- protocols ------------------------------------------------------------

@dataclass(frozen=True)
class NmqcProtocol:
    """``k`` GHZ qubits; qubit ``i`` reads the parity of the inputs in ``parity_sets[i]``."""

    n: int
    parity_sets: tuple
    phases: tuple  # (phi_0, phi_1, ..., phi_k)

    def __post_init__(self):
        sets = tuple(as_mask(s) for s in self.parity_sets)
        if len(self.phases) != len(sets) + 1:
            raise ValueError("need one phase per qubit plus the constant phase")
        object.__setattr__(self, "parity_sets", sets)
        object.__setattr__(self, "phases", tuple(self.phases))

    @property
    def k(self) -> int:
        return len(self.parity_sets)

    def is_exact(self) -> bool:
        return all(isinstance(p, Dyadic) for p in self.phases)


@dataclass(frozen=True)
class OutputDistribution:
    p_one: float | Fraction
    deterministic: bool

    def __post_init__(self):
        if not 0 <= self.p_one <= 1:
            raise ValueError("p_one must be a probability")

    @property
    def bit(self) -> int | None:
        if not self.deterministic:
            return None
        return int(self.p_one)


def protocol_from_rep(rep: PeriodicRepresentation) -> NmqcProtocol:
    """One qubit per nonempty monomial of the canonical form of ``rep``."""
    represented_function(rep)
    canon = canonicalize(rep)
    sets = canon.monomials
    phases = (canon.constant,) + tuple(canon.phi[m] for m in sets)
    return NmqcProtocol(rep.n, tuple(sets), phases)


def _parities(protocol: NmqcProtocol, bits: Sequence[int]) -> list[int]:
    if len(bits) != protocol.n:
        raise ValueError(f"expected {protocol.n} input bits, got {len(bits)}")
    x = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError("input bits must be 0/1")
        x |= int(b) << i
    return [bin(x & s).count("1") & 1 for s in protocol.parity_sets]


def measurement_angles(protocol: NmqcProtocol, bits: Sequence[int]) -> list[float]:
    """Per-qubit angle ``pi * (phi_i z_i + phi_0 / k)`` of the X-Y plane measurement."""
    zs = [1 - 2 * p for p in _parities(protocol, bits)]
    k = max(protocol.k, 1)
    ph0 = float(protocol.phases[0])
    return [math.pi * (float(p) * z + ph0 / k) for p, z in zip(protocol.phases[1:], zs)]


def simulate(protocol: NmqcProtocol, bits: Sequence[int]) -> OutputDistribution:
    """Distribution of the output parity: ``P(0) = (1 + cos(pi * theta)) / 2``."""
    zs = [1 - 2 * p for p in _parities(protocol, bits)]
    if protocol.is_exact():
        theta = protocol.phases[0]
        for p, z in zip(protocol.phases[1:], zs):
            theta = theta + p if z == 1 else theta - p
        if theta.is_integer():
            return OutputDistribution(int(theta) & 1, True)
        if (theta.scale_pow2(1)).is_integer():
            return OutputDistribution(Fraction(1, 2), False)
        theta = float(theta)
    else:
        theta = float(protocol.phases[0]) + sum(float(p) * z for p, z in zip(protocol.phases[1:], zs))
    p_one = (1.0 - math.cos(math.pi * theta)) / 2.0
    if abs(p_one - round(p_one)) < MU_TOL:
        return OutputDistribution(int(round(p_one)), True)
    return OutputDistribution(p_one, False)


# -- distributed identities ---------------------------------------------------

IDENTITY_CAP = 12


def _block_weights(total: int, blocks: Sequence[Sequence[int]]) -> list[np.ndarray]:
    idx = np.arange(1 << total, dtype=np.int64)
    out = []
    for blk in blocks:
        w = np.zeros(1 << total, dtype=np.int64)
        for v in blk:
            w += (idx >> v) & 1
        out.append(w)
    return out


def _cq(w: np.ndarray) -> np.ndarray:
    return (w >> 1) & 1


def check_distributive_identity(which: str, n: int, m: int | None = None) -> bool:
    """Check one of the CQ decompositions of a function of parities, exhaustively.

    ``and2``: ``AND(+x_1, +x_2) = CQ_2n(x_1, x_2) + CQ_n(x_1) + CQ_n(x_2)``
    ``maj3``: ``Maj(+x, +y, +z) = CQ_2n(x,y) + CQ_2n(y,z) + CQ_2n(z,x)``
    ``cqm``:  ``CQ_m(+x_1..+x_m) = CQ_nm(x) + sum_j CQ_n(x_j)``

    where ``+`` is XOR and ``+x_j`` is the parity of player inputs block ``j``
    (player ``i`` holds bit ``i`` of every block).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if which == "and2":
        groups = 2
    elif which == "maj3":
        groups = 3
    elif which == "cqm":
        if m is None or m < 1:
            raise ValueError("cqm needs m >= 1")
        groups = m
    else:
        raise ValueError(f"unknown identity {which!r}")
    total = groups * n
    if total > IDENTITY_CAP:
        raise ValueError(f"{total} variables exceeds the cap of {IDENTITY_CAP}")
    blocks = [list(range(j * n, (j + 1) * n)) for j in range(groups)]
    ws = _block_weights(total, blocks)
    par = [w & 1 for w in ws]
    if which == "and2":
        lhs = par[0] & par[1]
        rhs = _cq(ws[0] + ws[1]) ^ _cq(ws[0]) ^ _cq(ws[1])
    elif which == "maj3":
        lhs = ((par[0] + par[1] + par[2]) >= 2).astype(np.int64)
        rhs = _cq(ws[0] + ws[1]) ^ _cq(ws[1] + ws[2]) ^ _cq(ws[2] + ws[0])
    else:
        lhs = _cq(sum(par))
        rhs = _cq(sum(ws))
        for w in ws:
            rhs = rhs ^ _cq(w)
    return bool(np.array_equal(lhs, rhs))
