"""Exception types shared across the package."""


class UsoKitError(Exception):
    """Base class for all domain errors raised by uso_kit."""


class FormatError(UsoKitError, ValueError):
    """Malformed .uso text; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotAnOrientationError(UsoKitError, ValueError):
    """An operation required a consistent orientation."""


class NotAUsoError(UsoKitError, ValueError):
    """An operation required a unique sink orientation."""


class NotAPusoError(UsoKitError, ValueError):
    """An operation required a pseudo unique sink orientation."""


class NotBijectiveError(UsoKitError, ValueError):
    """An outmap (or an induced outmap) had to be a bijection but is not."""


class PreconditionViolatedError(UsoKitError, ValueError):
    """A checked construction precondition does not hold for the input."""


class ResourceLimitError(UsoKitError, RuntimeError):
    """The request exceeds a documented size cap for exhaustive work."""
