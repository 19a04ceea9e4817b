"""Depth-2 NMQC protocols for symmetric functions.

A block with offset ``k`` computes ``Exact^k_n``. Layer 1 measures, for each
``j = 0..m`` with ``m = floor(log2 n)``, an ``n``-qubit GHZ state whose output
``Z_j`` has expectation ``cos(pi * (|x| - k) / 2**j)``. If ``|x| == k`` every
``Z_j`` is deterministically +1; otherwise the lowest set bit of ``|x| - k``
gives a ``j`` with ``Z_j = -1`` for sure. Layer 2 computes ``OR`` of the
``m + 1`` outcome bits with a one-layer protocol, so ``Exact^k = NOT OR``.
A symmetric function is the XOR of ``Exact^k`` over its accepted weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence

from .core import BooleanFunction, SymmetricProfile, is_symmetric, make_family
from .dyadic import Dyadic
from .nmqc import NmqcProtocol, protocol_from_rep, simulate
from .periodic import PeriodicRepresentation, from_fourier, verify

__all__ = [
    "Layer1Block",
    "Depth2Protocol",
    "build_symmetric",
    "build_for",
    "qubit_count",
    "block_qubits",
    "simulate_support",
    "verify_depth2",
]


def _log2_floor(n: int) -> int:
    return n.bit_length() - 1


@dataclass(frozen=True)
class Layer1Block:
    """``Exact^offset_n`` detector: ``m + 1`` one-layer protocols ``Z_0..Z_m``."""

    n: int
    offset: int

    @property
    def m(self) -> int:
        return _log2_floor(self.n)

    @cached_property
    def protocols(self) -> tuple[NmqcProtocol, ...]:
        # (|x| - k) / 2^j = (n/2 - k) / 2^j - sum_i x_i / 2^(j+1)
        out = []
        for j in range(self.m + 1):
            phi0 = Dyadic(self.n - 2 * self.offset, j + 1)
            step = -Dyadic(1, j + 1)
            out.append(NmqcProtocol(self.n, tuple(1 << i for i in range(self.n)),
                                    (phi0,) + (step,) * self.n))
        return tuple(out)

    def outcome_sets(self, bits: Sequence[int]) -> list[tuple[int, ...]]:
        """Possible outcome bits of each ``Z_j`` on input ``bits``."""
        sets = []
        for proto in self.protocols:
            dist = simulate(proto, bits)
            sets.append((dist.bit,) if dist.deterministic else (0, 1))
        return sets


def _or_layer(width: int) -> NmqcProtocol:
    rep = from_fourier(make_family("or", width))
    return protocol_from_rep(rep)


@dataclass(frozen=True)
class Depth2Protocol:
    """XOR of ``NOT OR(block outputs)`` over ``blocks``, plus ``constant``.

    ``complemented`` records that blocks cover the rejected weights, in which
    case the accepted-weight indicator is one minus their sum.
    """

    n: int
    blocks: tuple[Layer1Block, ...]
    constant: int
    complemented: bool = False

    @property
    def m(self) -> int:
        return _log2_floor(self.n)

    @cached_property
    def layer2(self) -> NmqcProtocol:
        """One-layer OR over the ``m + 1`` layer-1 outcome bits of a block."""
        return _or_layer(self.m + 1)

    @cached_property
    def layer2_rep(self) -> PeriodicRepresentation:
        return from_fourier(make_family("or", self.m + 1))

    def layer2_parity_sets(self) -> list[tuple[int, ...]]:
        """For each layer-2 qubit, the layer-1 outcome bits (0-based ``j``) it reads."""
        return [tuple(j for j in range(self.m + 1) if (s >> j) & 1)
                for s in self.layer2.parity_sets]

    @cached_property
    def _or_table(self) -> dict[tuple[int, ...], int]:
        table = {}
        for zs in product((0, 1), repeat=self.m + 1):
            dist = simulate(self.layer2, zs)
            if not dist.deterministic:
                raise AssertionError("layer-2 OR protocol is not exact")
            table[zs] = dist.bit
        return table


def block_qubits(n: int) -> int:
    m = _log2_floor(n)
    return (m + 1) * n + (1 << (m + 1)) - 1


def qubit_count(p: Depth2Protocol) -> int:
    """Blocks times the per-block count; layer-1 qubits are not shared."""
    return len(p.blocks) * block_qubits(p.n)


def build_symmetric(profile: SymmetricProfile) -> Depth2Protocol:
    """Exact blocks for whichever of the accepted/rejected weight sets is smaller.

    Ties use the accepted weights, so ``OR_n`` becomes one block at offset 0
    (complemented) and ``Maj_3`` two blocks at offsets 2 and 3.
    """
    n = profile.n
    if n < 1:
        raise ValueError("n must be >= 1")
    accept = sorted(set(profile.accept))
    reject = sorted(set(range(n + 1)) - set(accept))
    complemented = len(reject) < len(accept)
    chosen = reject if complemented else accept
    blocks = tuple(Layer1Block(n, k) for k in chosen)
    # each Exact^k is 1 XOR OR_k; the complement adds one more 1
    constant = (len(blocks) + complemented) & 1
    return Depth2Protocol(n, blocks, constant, complemented)


def build_for(f: BooleanFunction) -> Depth2Protocol:
    profile = is_symmetric(f)
    if profile is None:
        raise ValueError("function is not symmetric")
    return build_symmetric(profile)


def simulate_support(p: Depth2Protocol, bits: Sequence[int]):
    """Exact support of layer-1 outcomes and the set of final output bits.

    Returns ``(supports, outputs)`` where ``supports[b]`` is the set of
    outcome vectors ``(z_0..z_m)`` block ``b`` can produce. Blocks use
    independent qubits, so the joint support is their product and the
    output set is the XOR-sumset of the per-block OR values.
    """
    if len(bits) != p.n:
        raise ValueError(f"expected {p.n} input bits, got {len(bits)}")
    supports = []
    outputs = {p.constant}
    table = p._or_table
    for block in p.blocks:
        support = set(product(*block.outcome_sets(bits)))
        supports.append(support)
        vals = {table[z] for z in support}
        outputs = {a ^ v for a in outputs for v in vals}
    return supports, outputs


def verify_depth2(p: Depth2Protocol, f: BooleanFunction) -> bool:
    """True iff every input yields exactly one possible output, equal to ``f``."""
    if f.n != p.n:
        raise ValueError(f"arity mismatch: protocol on {p.n}, f on {f.n}")
    if not verify(p.layer2_rep, make_family("or", p.m + 1)).ok:
        return False
    for x in range(1 << p.n):
        bits = [(x >> i) & 1 for i in range(p.n)]
        _, outputs = simulate_support(p, bits)
        if outputs != {int(f.table[x])}:
            return False
    return True
