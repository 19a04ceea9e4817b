"""Exact dyadic rationals ``num / 2**den_pow``.

Every coefficient in this package (Fourier coefficients, periodic phases)
lives in the ring of dyadic rationals, so a tiny dedicated number type is
both faster and stricter than :class:`fractions.Fraction`: it refuses to
silently leave the ring.

Values are kept reduced: ``num`` is odd, or ``num == 0`` and ``den_pow == 0``.
"""

from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Union

__all__ = [
    "Dyadic",
    "as_dyadic",
    "digits",
    "reduce_mod",
    "integer_parity",
    "arith",
    "ZERO",
    "ONE",
    "HALF",
]


def _trailing_zeros(m: int) -> int:
    return (m & -m).bit_length() - 1


class Dyadic:
    """An exact rational with power-of-two denominator."""

    __slots__ = ("num", "den_pow")

    num: int
    den_pow: int

    def __init__(self, num: int = 0, den_pow: int = 0):
        if type(num) is not int or type(den_pow) is not int:
            if not isinstance(num, numbers.Integral) or not isinstance(den_pow, numbers.Integral):
                raise TypeError("Dyadic(num, den_pow) takes integers")
            num = int(num)
            den_pow = int(den_pow)
        if den_pow < 0:
            num <<= -den_pow
            den_pow = 0
        if num == 0:
            den_pow = 0
        elif den_pow:
            shift = min(_trailing_zeros(num), den_pow)
            num >>= shift
            den_pow -= shift
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den_pow", den_pow)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_fraction(cls, q: Fraction) -> "Dyadic":
        den = q.denominator
        if den & (den - 1):
            raise ValueError(f"{q} is not a dyadic rational")
        return cls(q.numerator, den.bit_length() - 1)

    @classmethod
    def from_dict(cls, d: dict) -> "Dyadic":
        return cls(int(d["num"]), int(d["den_pow"]))

    def to_dict(self) -> dict:
        return {"num": str(self.num), "den_pow": self.den_pow}

    # -- conversions ----------------------------------------------------
    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.den_pow)

    def __float__(self) -> float:
        if self.den_pow < 1000:
            return self.num / (1 << self.den_pow)
        return float(self.as_fraction())

    def __int__(self) -> int:
        if self.den_pow:
            raise ValueError(f"{self} is not an integer")
        return self.num

    def is_integer(self) -> bool:
        return self.den_pow == 0

    def floor(self) -> int:
        return self.num >> self.den_pow

    def ceil(self) -> int:
        return -((-self.num) >> self.den_pow)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self, other
        if a.den_pow < b.den_pow:
            a, b = b, a
        return Dyadic(a.num + (b.num << (a.den_pow - b.den_pow)), a.den_pow)

    __radd__ = __add__

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.den_pow)

    def __pos__(self) -> "Dyadic":
        return self

    def __abs__(self) -> "Dyadic":
        return self if self.num >= 0 else -self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Dyadic(self.num * other.num, self.den_pow + other.den_pow)

    __rmul__ = __mul__

    def scale_pow2(self, e: int) -> "Dyadic":
        """Return ``self * 2**e`` (``e`` may be negative)."""
        return Dyadic(self.num, self.den_pow - e)

    # -- comparison -----------------------------------------------------
    def _cmp_key(self, other: "Dyadic") -> tuple[int, int]:
        k = max(self.den_pow, other.den_pow)
        return self.num << (k - self.den_pow), other.num << (k - other.den_pow)

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.num == other.num and self.den_pow == other.den_pow
        if isinstance(other, numbers.Integral):
            return self.den_pow == 0 and self.num == other
        if isinstance(other, Fraction):
            return self.as_fraction() == other
        if isinstance(other, float):
            return float(self) == other
        return NotImplemented

    def __hash__(self):
        if self.den_pow == 0:
            return hash(self.num)
        return hash(self.as_fraction())

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._cmp_key(other)
        return a <= b

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._cmp_key(other)
        return a > b

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._cmp_key(other)
        return a >= b

    def __bool__(self) -> bool:
        return self.num != 0

    def __repr__(self) -> str:
        return f"Dyadic({self.num}, {self.den_pow})"

    def __str__(self) -> str:
        if self.den_pow == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.den_pow}"

    def __reduce__(self):
        return (Dyadic, (self.num, self.den_pow))


DyadicLike = Union[Dyadic, int, Fraction]


def _coerce(x):
    if isinstance(x, Dyadic):
        return x
    if isinstance(x, numbers.Integral):
        return Dyadic(int(x))
    if isinstance(x, Fraction):
        return Dyadic.from_fraction(x)
    return NotImplemented


def as_dyadic(x) -> Dyadic:
    """Coerce an int, Fraction, Dyadic or ``"p/2^k"`` string to a Dyadic."""
    if isinstance(x, str):
        x = Fraction(x)
    d = _coerce(x)
    if d is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to Dyadic")
    return d


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)


def arith(op: str, a, b=None) -> Dyadic:
    """Dispatch ``add | sub | mul | negate | scale_pow2`` by name."""
    a = as_dyadic(a)
    if op == "negate":
        return -a
    if op == "scale_pow2":
        return a.scale_pow2(int(b))
    b = as_dyadic(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown dyadic operation {op!r}")


def digits(d) -> int:
    """Number of binary digits: the least k with ``2**k * d`` integral."""
    return as_dyadic(d).den_pow


def reduce_mod(d, m: int) -> tuple[Dyadic, int]:
    """Split ``d = carry*m + residue`` with ``0 <= residue < m``, for m in {1, 2}."""
    if m not in (1, 2):
        raise ValueError("modulus must be 1 or 2")
    d = as_dyadic(d)
    shift = d.den_pow + (m == 2)
    carry = d.num >> shift
    return d - carry * m, carry


def integer_parity(d) -> int | None:
    """Parity bit of an integral dyadic, ``None`` if ``d`` is not an integer."""
    d = as_dyadic(d)
    if d.den_pow:
        return None
    return d.num & 1
