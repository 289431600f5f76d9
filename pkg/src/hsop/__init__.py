"""Degrees of homogeneous systems of parameters for invariants of binary forms."""

from hsop.errors import (
    HsopError,
    IndexMismatch,
    LengthMismatch,
    NotPolynomial,
    NotUnimodular,
    OrderTooHigh,
    PreconditionFailed,
    UnsupportedDegree,
    ZeroForm,
)

__version__ = "0.1.0"

__all__ = [
    "HsopError",
    "IndexMismatch",
    "LengthMismatch",
    "NotPolynomial",
    "NotUnimodular",
    "OrderTooHigh",
    "PreconditionFailed",
    "UnsupportedDegree",
    "ZeroForm",
    "__version__",
]
