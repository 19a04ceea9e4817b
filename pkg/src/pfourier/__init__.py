"""Periodic Fourier representations of Boolean functions and the one- and
two-layer measurement protocols they give rise to."""

from .core import (
    BooleanFunction,
    FunctionSpecError,
    SymmetricProfile,
    make_family,
    parse_function_spec,
)
from .dyadic import Dyadic
from .periodic import PeriodicRepresentation, VerificationReport, verify

__all__ = [
    "BooleanFunction",
    "Dyadic",
    "FunctionSpecError",
    "PeriodicRepresentation",
    "SymmetricProfile",
    "VerificationReport",
    "make_family",
    "parse_function_spec",
    "verify",
]
__version__ = "0.1.0"
