"""Exception types shared across the package."""


class BinidealError(Exception):
    """Base class for all package errors."""


class ParseError(BinidealError):
    """Malformed ideal file or polynomial text."""


class NotBinomialError(BinidealError):
    """A polynomial with more than two terms where a binomial is required."""


class NotPureDifferenceError(BinidealError):
    """An operation requiring unit-free (coefficient 1) binomials got something else."""


class UnitIdealError(BinidealError):
    """The ideal is the whole ring where a proper ideal is required."""


class NotZeroDimensionalError(BinidealError):
    """A solver/degree operation needs a zero-dimensional ideal."""


class ExponentOverflowError(BinidealError):
    """An exponent exceeded the machine-width safety cap."""


class VerificationError(BinidealError):
    """A --verify re-check failed."""


class TimeoutExceeded(BinidealError):
    """Cooperative deadline hit; partial results may be attached."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
