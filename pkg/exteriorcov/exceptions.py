"""
Exceptions raised by the exteriorcov engine.
"""


class ExteriorCovError(Exception):
    """Base class for every error raised by the engine."""


class InvalidRootSystemError(ExteriorCovError, ValueError):
    """Raised for a (type, rank) pair that names no simple Lie algebra."""


class InvalidWeightError(ExteriorCovError, ValueError):
    """Raised when a weight has the wrong length or is not dominant where required."""


class BudgetExceededError(ExteriorCovError):
    """Raised when a computation would exceed its configured size or time budget."""


class InexactDivisionError(ExteriorCovError, ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class ConsistencyError(ExteriorCovError):
    """
    Raised when an identity that is a theorem fails inside the engine.

    This always signals an implementation bug, never a mathematical result.
    """


class CacheError(ExteriorCovError):
    """Raised when a cache entry cannot be written."""


class MarginCertificateError(BudgetExceededError):
    """Raised when a small weight lies too close to the boundary of the scanned box."""


EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2


class CommandError(ExteriorCovError):
    """Raised by controllers; carries the process exit code and a readable detail."""

    def __init__(self, exit_code: int, detail: str):
        super().__init__(detail)
        self.exit_code = exit_code
        self.detail = detail


def command_error(action: str, error: Exception) -> CommandError:
    """Translate an engine exception into a CommandError for the failed action."""
    if isinstance(error, CommandError):
        return error
    if isinstance(error, ConsistencyError):
        code = EXIT_DISCREPANCY
    elif isinstance(error, (ExteriorCovError, ValueError)):
        code = EXIT_USAGE
    else:
        code = EXIT_DISCREPANCY
    return CommandError(code, f"Failed to {action}: {str(error)}")
