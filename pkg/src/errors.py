"""Exception hierarchy shared by every cqsres package."""

from __future__ import annotations

from typing import Optional


class ResolutionError(Exception):
    """Base class for domain failures (exit code 1 on the command line)."""
    pass


class NotContractible(ResolutionError):
    """A chain does not blow down to a canonical continued fraction."""
    pass


class NonIntegral(ResolutionError):
    """A signed invariant or neighbor formula produced a non-integer."""
    pass


class NoSuchCurve(ResolutionError):
    """No curve c >= 1 realizes the requested signed invariant."""
    pass


class ConstructionFailed(ResolutionError):
    """An M- or N-resolution could not be built or failed validation."""
    pass


class Degenerate(ResolutionError):
    """An antiflip hit the excluded case t = 0."""
    pass


class FormulaMismatch(ResolutionError):
    """Two closed forms that must agree disagree."""
    pass


class NegativeArrowCount(ResolutionError):
    """Inverting a hom matrix produced a negative arrow multiplicity."""
    pass


class InvariantViolation(ResolutionError):
    """A cross-validation invariant failed."""
    pass


class InvalidParameters(ResolutionError):
    """Parameters outside the documented range of a construction."""
    pass


class ChainSyntaxError(ValueError):
    """Chain text does not match the chain grammar."""

    GRAMMAR = 'chain := node ("-(" INT ")-" node)* ; node := "[" INT "|" INT "]" | "*"'

    def __init__(self, message: str, *, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.text = text
        self.position = position


class BraidWordSyntaxError(ValueError):
    """Braid word text does not match the token grammar."""

    GRAMMAR = 'word := token ("," token)* ; token := ("R" | "L") INT'

    def __init__(self, message: str, *, token: Optional[str] = None) -> None:
        super().__init__(message)
        self.token = token


__all__ = [
    "ResolutionError",
    "NotContractible",
    "NonIntegral",
    "NoSuchCurve",
    "ConstructionFailed",
    "Degenerate",
    "FormulaMismatch",
    "NegativeArrowCount",
    "InvariantViolation",
    "InvalidParameters",
    "ChainSyntaxError",
    "BraidWordSyntaxError",
]
