"""Truth-table Boolean functions and the named families built on them.

Index convention: entry ``m`` of a truth table is ``f(bits)`` where variable
``i`` (1-based) is bit ``i - 1`` of ``m``; variable 1 is least significant.
The {+1,-1} view maps a bit ``b`` to ``1 - 2b``.

Subsets of variables are passed around as integer bitmasks (bit ``i - 1``
set means variable ``i`` is in the set). :func:`mask` and :func:`members`
convert to and from 1-based index collections.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._transforms import popcounts

__all__ = [
    "MAX_VARS",
    "BooleanFunction",
    "SymmetricProfile",
    "FunctionSpecError",
    "mask",
    "members",
    "as_mask",
    "make_family",
    "from_truth_table",
    "evaluate",
    "compose_parities",
    "is_symmetric",
    "parse_function_spec",
    "FAMILIES",
]

MAX_VARS = 20


def mask(*indices: int) -> int:
    """Bitmask of 1-based variable indices: ``mask(1, 3) == 0b101``."""
    m = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"variable indices are 1-based, got {i}")
        m |= 1 << (i - 1)
    return m


def members(m: int) -> tuple[int, ...]:
    """Sorted 1-based indices of the variables in bitmask ``m``."""
    out = []
    i = 1
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def as_mask(s) -> int:
    """Accept either an int bitmask or an iterable of 1-based indices."""
    if isinstance(s, (int, np.integer)):
        if s < 0:
            raise ValueError("negative bitmask")
        return int(s)
    return mask(*s)


class BooleanFunction:
    """A Boolean function on ``n`` bits, stored as a read-only truth table."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table):
        if not 0 <= n <= MAX_VARS:
            raise ValueError(f"n must be in [0, {MAX_VARS}], got {n}")
        arr = np.array(table, dtype=np.int64).reshape(-1)
        if arr.size != 1 << n:
            raise ValueError(f"truth table has {arr.size} entries, expected {1 << n}")
        if np.any((arr != 0) & (arr != 1)):
            raise ValueError("truth table entries must be 0 or 1")
        arr = arr.astype(np.uint8)
        arr.flags.writeable = False
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "table", arr)

    def __setattr__(self, name, value):
        raise AttributeError("BooleanFunction is immutable")

    def __call__(self, bits: Sequence[int]) -> int:
        return evaluate(self, bits)

    def signs(self) -> np.ndarray:
        """The {+1,-1} view as an int64 array."""
        return 1 - 2 * self.table.astype(np.int64)

    def value_at_signs(self, x: Sequence[int]) -> int:
        """``f`` on a {+1,-1} input, returned in {+1,-1}."""
        bits = [(1 - xi) // 2 for xi in x]
        return 1 - 2 * evaluate(self, bits)

    def is_constant(self) -> bool:
        return bool(np.all(self.table == self.table[0]))

    def __invert__(self) -> "BooleanFunction":
        return BooleanFunction(self.n, 1 - self.table)

    def __xor__(self, other: "BooleanFunction") -> "BooleanFunction":
        _same_arity(self, other)
        return BooleanFunction(self.n, self.table ^ other.table)

    def __and__(self, other: "BooleanFunction") -> "BooleanFunction":
        _same_arity(self, other)
        return BooleanFunction(self.n, self.table & other.table)

    def __or__(self, other: "BooleanFunction") -> "BooleanFunction":
        _same_arity(self, other)
        return BooleanFunction(self.n, self.table | other.table)

    def __eq__(self, other):
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self) -> str:
        if self.n <= 4:
            return f"BooleanFunction({self.n}, {self.table.tolist()})"
        return f"BooleanFunction(n={self.n}, weight={int(self.table.sum())})"

    def to_hex(self) -> str:
        """Truth table as a hex integer whose bit ``m`` is ``f(m)``."""
        value = 0
        for m in np.flatnonzero(self.table):
            value |= 1 << int(m)
        return format(value, "x")


def _same_arity(f: BooleanFunction, g: BooleanFunction) -> None:
    if f.n != g.n:
        raise ValueError(f"arity mismatch: {f.n} vs {g.n}")


@dataclass(frozen=True)
class SymmetricProfile:
    """A symmetric function given by the input weights it accepts."""

    n: int
    accept: frozenset

    def __post_init__(self):
        acc = frozenset(int(w) for w in self.accept)
        if any(not 0 <= w <= self.n for w in acc):
            raise ValueError(f"accepted weights must lie in [0, {self.n}]")
        object.__setattr__(self, "accept", acc)

    def to_function(self) -> BooleanFunction:
        w = popcounts(self.n)
        return BooleanFunction(self.n, np.isin(w, sorted(self.accept)).astype(np.uint8))


def from_truth_table(n: int, bits) -> BooleanFunction:
    return BooleanFunction(n, bits)


def evaluate(f: BooleanFunction, bits: Sequence[int]) -> int:
    if len(bits) != f.n:
        raise ValueError(f"expected {f.n} input bits, got {len(bits)}")
    m = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"input bits must be 0/1, got {b!r}")
        m |= int(b) << i
    return int(f.table[m])


# -- named families -------------------------------------------------------

def _weight_family(n: int, rule) -> BooleanFunction:
    w = popcounts(n)
    return BooleanFunction(n, rule(w).astype(np.uint8))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def make_family(name: str, n: int, k: int | None = None, accept: Iterable[int] | None = None) -> BooleanFunction:
    """Build a named symmetric family on ``n`` variables.

    ``name`` is one of ``and, or, xor, maj, cq, c3, mod, exact, lsb, sym``.
    ``mod`` and ``exact`` take the modulus / target weight as ``k``; ``lsb``
    takes the bit position (1 = least significant) as ``k``; ``sym`` takes
    the accepted weights as ``accept``.
    """
    name = name.lower()
    _require(0 <= n <= MAX_VARS, f"n must be in [0, {MAX_VARS}]")
    if name != "sym":
        _require(n >= 1, f"{name} needs n >= 1")
    if name == "and":
        return _weight_family(n, lambda w: w == n)
    if name == "or":
        return _weight_family(n, lambda w: w >= 1)
    if name == "xor":
        return _weight_family(n, lambda w: w & 1)
    if name == "maj":
        _require(n % 2 == 1, "maj needs odd n")
        return _weight_family(n, lambda w: 2 * w > n)
    if name == "cq":
        return _weight_family(n, lambda w: (w >> 1) & 1)
    if name == "c3":
        # binom(w, 3) is odd iff the two low bits of w are both set
        return _weight_family(n, lambda w: (w & 3) == 3)
    if name == "mod":
        _require(k is not None and k >= 2, "mod needs k >= 2")
        return _weight_family(n, lambda w: w % k == 0)
    if name == "exact":
        _require(k is not None and 0 <= k <= n, "exact needs 0 <= k <= n")
        return _weight_family(n, lambda w: w == k)
    if name == "lsb":
        _require(k is not None and k >= 1, "lsb needs k >= 1")
        return _weight_family(n, lambda w: (w >> (k - 1)) & 1)
    if name == "sym":
        _require(accept is not None, "sym needs an accept set")
        return SymmetricProfile(n, frozenset(accept)).to_function()
    raise ValueError(f"unknown family {name!r}")


FAMILIES = ("and", "or", "xor", "maj", "cq", "c3", "mod", "exact", "lsb", "sym")


def compose_parities(g: BooleanFunction, sets: Sequence, n: int) -> BooleanFunction:
    """The linear sketch ``x -> g(parity(x on S_1), ..., parity(x on S_k))``."""
    if len(sets) != g.n:
        raise ValueError(f"g takes {g.n} inputs but {len(sets)} parity sets were given")
    masks = [as_mask(s) for s in sets]
    if any(m >> n for m in masks):
        raise ValueError(f"parity set outside [1, {n}]")
    idx = np.arange(1 << n, dtype=np.int64)
    inner = np.zeros(1 << n, dtype=np.int64)
    for j, m in enumerate(masks):
        par = np.zeros(1 << n, dtype=np.int64)
        for i in range(n):
            if m >> i & 1:
                par ^= (idx >> i) & 1
        inner |= par << j
    return BooleanFunction(n, g.table[inner])


def is_symmetric(f: BooleanFunction) -> SymmetricProfile | None:
    """The accepted-weight profile of ``f``, or ``None`` if ``f`` is not symmetric."""
    w = popcounts(f.n)
    accept = set()
    for weight in range(f.n + 1):
        vals = f.table[w == weight]
        if np.any(vals != vals[0]):
            return None
        if vals[0]:
            accept.add(weight)
    return SymmetricProfile(f.n, frozenset(accept))


# -- textual function specs -----------------------------------------------

class FunctionSpecError(ValueError):
    """Malformed function spec; ``pos`` is the offending character offset."""

    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_INT = re.compile(r"\d+")


def parse_function_spec(text: str) -> BooleanFunction:
    """Parse ``name:args`` specs such as ``maj:3``, ``mod:3:4``, ``tt:2:8``.

    Grammar::

        and:N | or:N | xor:N | maj:N | cq:N | c3:N | lsb:L:N
        mod:K:N | exact:K:N | sym:N:w1,w2,...
        tt:N:<hex, bit m of the integer is f(m)>
        anf:N:<monomials joined by '+', e.g. x1x2+x3, '1' for the constant>
    """
    text = text.strip()
    head, sep, rest = text.partition(":")
    name = head.lower()
    if not sep:
        raise FunctionSpecError("missing ':'", text, len(head))
    pos = len(head) + 1

    def take_int(s: str, at: int) -> int:
        if not _INT.fullmatch(s):
            raise FunctionSpecError(f"expected an integer, got {s!r}", text, at)
        return int(s)

    parts = rest.split(":")
    offsets = [pos]
    for p in parts[:-1]:
        offsets.append(offsets[-1] + len(p) + 1)

    def arity(expected: int) -> None:
        if len(parts) != expected:
            raise FunctionSpecError(f"{name} takes {expected} argument(s), got {len(parts)}", text, pos)

    try:
        if name in ("and", "or", "xor", "maj", "cq", "c3"):
            arity(1)
            return make_family(name, take_int(parts[0], offsets[0]))
        if name in ("mod", "exact", "lsb"):
            arity(2)
            k = take_int(parts[0], offsets[0])
            n = take_int(parts[1], offsets[1])
            return make_family(name, n, k=k)
        if name == "sym":
            arity(2)
            n = take_int(parts[0], offsets[0])
            ws = [] if parts[1] == "" else parts[1].split(",")
            acc = []
            at = offsets[1]
            for w in ws:
                acc.append(take_int(w, at))
                at += len(w) + 1
            return make_family("sym", n, accept=acc)
        if name == "tt":
            arity(2)
            n = take_int(parts[0], offsets[0])
            try:
                value = int(parts[1], 16)
            except ValueError:
                raise FunctionSpecError(f"bad hex truth table {parts[1]!r}", text, offsets[1]) from None
            if n > MAX_VARS:
                raise FunctionSpecError(f"n must be <= {MAX_VARS}", text, offsets[0])
            if value >> (1 << n):
                raise FunctionSpecError(f"truth table has more than 2^{n} bits", text, offsets[1])
            bits = [(value >> m) & 1 for m in range(1 << n)]
            return BooleanFunction(n, bits)
        if name == "anf":
            arity(2)
            n = take_int(parts[0], offsets[0])
            from .anf import parse_anf

            try:
                poly = parse_anf(parts[1], n)
            except ValueError as exc:
                raise FunctionSpecError(str(exc), text, offsets[1]) from None
            return poly.to_function()
    except FunctionSpecError:
        raise
    except ValueError as exc:
        raise FunctionSpecError(str(exc), text, pos) from None
    raise FunctionSpecError(f"unknown function family {head!r}", text, 0)
