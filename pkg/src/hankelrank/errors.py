"""Exception hierarchy shared by the whole package."""


class HankelRankError(Exception):
    """Base class for all package errors."""


class DimensionError(HankelRankError):
    """Mismatched variable counts, shapes, or out-of-range indices."""


class FormatError(HankelRankError):
    """Malformed input data (pencil files, generator rows, coefficient arrays)."""


class ExactnessError(HankelRankError):
    """An operation that must be exact left a nonzero remainder."""


class ContractError(HankelRankError):
    """A documented precondition was violated by the caller."""


class GenericityError(HankelRankError):
    """A random draw turned out degenerate; the caller should redraw."""


class RandomnessError(HankelRankError):
    """Bounded retries of a random draw were exhausted."""


class RetriesExhaustedError(GenericityError):
    """Redraw cap reached; carries the solve trace for post-mortem."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class ResourceError(HankelRankError):
    """A configured resource cap (basis size, pair count, degree) was hit."""


class VerificationError(HankelRankError):
    """An exact certificate check failed."""
