"""Utilities package."""

from mec.utils.errors import (
    InvalidInputError,
    InvariantError,
    MecError,
    NoGuaranteeError,
    SizeLimitError,
    SolverTimeoutError,
    UndefinedRatioError,
    UnsupportedError,
    format_error_message,
)
from mec.utils.formatting import format_bits, format_masses, format_table

__all__ = [
    "InvalidInputError",
    "InvariantError",
    "MecError",
    "NoGuaranteeError",
    "SizeLimitError",
    "SolverTimeoutError",
    "UndefinedRatioError",
    "UnsupportedError",
    "format_error_message",
    "format_bits",
    "format_masses",
    "format_table",
]
