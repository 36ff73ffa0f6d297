"""Exception types shared across the package."""


class GarsideError(Exception):
    """Base class for all package-specific errors."""


class StructureMismatch(GarsideError):
    """Operands belong to different Garside structures."""


class NotADivisor(GarsideError):
    """Quotient requested where no left divisibility holds."""


class CrossingPartition(GarsideError):
    """A partition has two blocks whose arcs cross."""


class NegativeLetter(GarsideError):
    """A positive-only operation received an inverse letter."""


class GuardExceeded(GarsideError):
    """A brute-force computation was asked to exceed its resource guard."""


class NotFound(GarsideError):
    """A bounded search finished without locating the target."""


class NoSolutionFound(GarsideError):
    """The equation search was exhausted; not a proof of unsolvability."""


class WordSyntaxError(GarsideError, ValueError):
    """A word or normal-form string failed to parse."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (at token {position})")
        self.position = position
