"""Exception types shared across the package."""


class RectPathError(Exception):
    """Base class for all errors raised by rectpath."""


class KindError(RectPathError, TypeError):
    """Exact and floating-point coefficients were mixed, or a kind is unsupported."""


class ResourceError(RectPathError):
    """A requested truncation exceeds a configured cap."""


class InternalConsistencyError(RectPathError):
    """Two independent computations that must agree did not.

    This indicates a bug in the library, never a property of the input.
    """

    def __init__(self, message, dump=None):
        super().__init__(message)
        self.dump = dump or {}


class BranchError(RectPathError):
    """A closed-form flow hit the principal-branch cut (-inf, 0]."""

    def __init__(self, message, segment=None):
        super().__init__(message)
        self.segment = segment


class ParseError(RectPathError, ValueError):
    """Malformed input file or inline specification."""

    def __init__(self, message, location=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location
