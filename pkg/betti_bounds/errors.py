"""
Exception hierarchy for betti-bounds

All domain failures derive from BettiBoundsError, itself a ValueError so
callers that only know about bad input keep working.
"""

from typing import Any, Dict, Optional


class BettiBoundsError(ValueError):
    """Base class for all betti-bounds errors"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Structured form used by the CLI on stderr"""
        return {
            'error': type(self).__name__,
            'message': self.message,
            'details': self.details,
        }


class ContractViolation(BettiBoundsError):
    """A precondition of an operation was not met"""


class GraphError(BettiBoundsError):
    """Invalid use of a stable graph operation"""


class UnstableSignatureError(BettiBoundsError):
    """(g, n) admits no stable curves"""

    def __init__(self, g: int, n: int):
        super().__init__(
            f"(g, n) = ({g}, {n}) is unstable: 2g - 2 + n must be positive",
            {'g': g, 'n': n},
        )


class BoundaryComponentError(BettiBoundsError):
    """A boundary component is not admissible for the requested query"""


class CacheError(BettiBoundsError):
    """The result cache could not be read or written"""
