"""Exception types shared across the library."""


class CslError(Exception):
    """Base class for all errors raised by csl."""


class NotADistribution(CslError):
    """Weights are negative or do not sum to exactly 1."""


class NotAWeightVector(CslError):
    """A convex-weight vector is malformed (negative entry, wrong length,
    or sum different from 1)."""


class InvalidProbability(CslError):
    """A mixing probability lies outside the open interval (0, 1)."""


class ParseError(CslError):
    """Term text could not be parsed; carries the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DecodeError(CslError):
    """A JSON document does not match the expected encoding."""
