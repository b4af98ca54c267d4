"""
Exception hierarchy for slicejunta.

Everything raised on purpose by the library derives from SliceJuntaError. The CLI maps
ClaimViolation to exit code 1 and every other SliceJuntaError to exit code 2.
"""


class SliceJuntaError(Exception):
    """Base class for all slicejunta errors."""


class CapacityError(SliceJuntaError, ValueError):
    """Input exceeds a stated size limit."""


class DomainMismatchError(SliceJuntaError, ValueError):
    """Two functions live on different slices."""


class PreconditionError(SliceJuntaError, ValueError):
    """An operation was called outside its documented preconditions."""


class FormatError(SliceJuntaError, ValueError):
    """A file does not follow the expected schema."""


class SingularSystemError(SliceJuntaError, ArithmeticError):
    """An exact linear system that must be nonsingular turned out singular."""


class ClaimViolation(SliceJuntaError, AssertionError):
    """A mathematical claim the toolkit checks did not hold."""
