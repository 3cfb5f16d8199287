"""Error types with user-facing messages and CLI exit codes."""

from typing import Any, Literal

ErrorType = Literal[
    "invalid_input",
    "size_limit",
    "timeout",
    "unsupported",
    "no_guarantee",
    "undefined_ratio",
    "invariant_failure",
    "unknown",
]

ERROR_MESSAGES: dict[ErrorType, str] = {
    "invalid_input": "Invalid input: {reason}",
    "size_limit": "Instance too large for {solver}: {vertices} vertices (limit {limit})",
    "timeout": "{solver} exceeded its {seconds:.1f}s budget",
    "unsupported": "Unsupported: {reason}",
    "no_guarantee": "No multiplicative guarantee: r = {r:.6f} >= 1",
    "undefined_ratio": "Ratio undefined: the profile cost bound is zero",
    "invariant_failure": "Invariant violated: {reason}",
    "unknown": "Unexpected error",
}

EXIT_CODES: dict[ErrorType, int] = {
    "invalid_input": 2,
    "size_limit": 3,
    "timeout": 3,
    "unsupported": 2,
    "no_guarantee": 2,
    "undefined_ratio": 2,
    "invariant_failure": 1,
    "unknown": 1,
}


class MecError(Exception):
    """Base exception for toolkit errors."""

    def __init__(
        self,
        message: str,
        error_type: ErrorType = "unknown",
        details: dict[str, Any] | None = None,
    ):
        super().__init__(message)
        self.error_type = error_type
        self.details = details or {}

    def user_message(self) -> str:
        """Get user-facing error message."""
        return format_error_message(self.error_type, **self.details)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES.get(self.error_type, 1)


class InvalidInputError(MecError):
    """Malformed file, negative mass, mismatched totals, bad index."""

    def __init__(self, reason: str):
        super().__init__(reason, error_type="invalid_input", details={"reason": reason})


class SizeLimitError(MecError):
    """Instance exceeds a solver's vertex budget."""

    def __init__(self, solver: str, vertices: int, limit: int):
        super().__init__(
            f"{solver}: {vertices} vertices exceeds limit {limit}",
            error_type="size_limit",
            details={"solver": solver, "vertices": vertices, "limit": limit},
        )


class SolverTimeoutError(MecError):
    """A solve ran past its wall-clock budget without a usable result."""

    def __init__(self, solver: str, seconds: float):
        super().__init__(
            f"{solver} timed out after {seconds:.1f}s",
            error_type="timeout",
            details={"solver": solver, "seconds": seconds},
        )


class UnsupportedError(MecError):
    """Operation is not defined for the given arguments."""

    def __init__(self, reason: str):
        super().__init__(reason, error_type="unsupported", details={"reason": reason})


class NoGuaranteeError(MecError):
    """The m=2 ratio r reached 1, so 1/(1-r) is meaningless."""

    def __init__(self, r: float):
        super().__init__(f"r = {r} >= 1", error_type="no_guarantee", details={"r": r})


class UndefinedRatioError(MecError):
    """Greedy cost over a zero bound."""

    def __init__(self) -> None:
        super().__init__("profile cost bound is zero", error_type="undefined_ratio")


class InvariantError(MecError):
    """A verified property failed."""

    def __init__(self, reason: str):
        super().__init__(reason, error_type="invariant_failure", details={"reason": reason})


def format_error_message(error_type: ErrorType, **kwargs: Any) -> str:
    """Format user-facing error message."""
    template = ERROR_MESSAGES.get(error_type, ERROR_MESSAGES["unknown"])
    try:
        return template.format(**kwargs)
    except (KeyError, ValueError):
        return template
