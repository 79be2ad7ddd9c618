"""Exception hierarchy shared by all modules."""


class RmacError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgument(RmacError, ValueError):
    """An argument is outside the documented domain of an operation."""


class ResourceLimit(RmacError):
    """A configurable size cap would be exceeded."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class ContractViolation(RmacError):
    """An input breaks a precondition that is checked at runtime."""


class UnsupportedCase(RmacError):
    """The input is well formed but outside what the algorithm handles."""


class VerificationFailure(RmacError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, message, **values):
        super().__init__(message)
        self.values = values
