"""Exception types shared across the package."""


class GsmagmaError(Exception):
    """Base class for all package errors."""


class ParseError(GsmagmaError, ValueError):
    """Malformed input text. ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ZeroPolynomialError(GsmagmaError, ValueError):
    """An operation that needs a leading term was given the zero polynomial."""


class MalformedContextError(GsmagmaError, ValueError):
    """A one-hole context was built or used with an invalid hole position."""


class StepCapExceeded(GsmagmaError, RuntimeError):
    """A reduction or completion exceeded the configured step budget."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"step cap of {cap} exceeded")


class ResourceCapExceeded(GsmagmaError, RuntimeError):
    """An enumeration would produce more objects than the configured cap."""

    def __init__(self, needed: int, cap: int):
        self.needed = needed
        self.cap = cap
        super().__init__(f"enumeration needs {needed} items, cap is {cap}")


class PreconditionError(GsmagmaError, RuntimeError):
    """An operation was called on a relation set that is not verified to be
    a Gröbner-Shirshov basis."""
