"""
Exception hierarchy for the teichcount engine

Exceptions are grouped by the CLI exit code they map to:
usage errors (1), geometric degeneracies (2) and internal invariant
violations (3).
"""

from typing import Any, Dict, Optional

from .config.validator import ConfigError


class TeichcountError(Exception):
    """Base class for all engine errors"""

    exit_code = 1

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.context: Dict[str, Any] = context or {}


# Usage and contract errors (exit 1)

class UsageError(TeichcountError):
    """Malformed command line"""


class OutOfRange(TeichcountError):
    """An argument lies outside the supported range"""


class RationalAlpha(TeichcountError):
    """The slit height is rational; the surface needs an irrational one"""


class BoundExceeded(TeichcountError):
    """Degree above the brute-force oracle bound"""


class PreconditionFailed(TeichcountError):
    """A state does not satisfy the precondition of an operation"""


class NotPrimitive(PreconditionFailed):
    """A move or normalization was asked for on a non-primitive state"""


class Singular(TeichcountError):
    """Integer matrix with zero determinant"""


# Geometric degeneracies (exit 2)

class GeometricDegeneracy(TeichcountError):
    """A trace could not be carried out on the flat surface"""

    exit_code = 2


class DegenerateStart(GeometricDegeneracy):
    """A ray starts inside a slit, where its side is ambiguous"""


class SeparatrixOverrun(GeometricDegeneracy):
    """A separatrix in a periodic direction exceeded its length bound"""


# Internal invariant violations (exit 3)

class InvariantViolation(TeichcountError):
    """An identity the engine relies on failed"""

    exit_code = 3


class NonIntegerResult(InvariantViolation):
    """A closed form that must be an integer produced a proper fraction"""


class NonTermination(InvariantViolation):
    """A move loop exceeded its step budget"""


class DeltaViolation(InvariantViolation):
    """Two independent counts disagree where they must agree"""


__all__ = [
    "ConfigError",
    "TeichcountError",
    "UsageError",
    "OutOfRange",
    "RationalAlpha",
    "BoundExceeded",
    "PreconditionFailed",
    "NotPrimitive",
    "Singular",
    "GeometricDegeneracy",
    "DegenerateStart",
    "SeparatrixOverrun",
    "InvariantViolation",
    "NonIntegerResult",
    "NonTermination",
    "DeltaViolation",
]
