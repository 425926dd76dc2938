"""Exception hierarchy.

Everything the library raises on bad input derives from :class:`InputError`
(exit code 1 at the command line); numerical failures derive from
:class:`NumericalError` (exit code 2).
"""

from __future__ import annotations


class UncertaintyCostError(Exception):
    """Base class for all package errors."""


class InputError(UncertaintyCostError, ValueError):
    """Invalid parameters, malformed files, or violated preconditions."""


class ParameterError(InputError):
    """A model parameter violates one of its constraints.

    ``field`` names the offending parameter.
    """

    def __init__(self, field: str, message: str):
        super().__init__(message)
        self.field = field


class DomainError(InputError):
    """An argument lies outside the domain of a formula."""


class ParseError(InputError):
    """A line of delimited input could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class AlignmentError(InputError):
    """Two series share no usable dates."""


class InsufficientDataError(InputError):
    """A sub-period holds no observations."""


class BracketError(InputError):
    """A root-finding bracket holds no sign change."""


class AmbiguousRootError(InputError):
    """More than one sign change was found inside a bracket."""

    def __init__(self, message: str, roots: list[tuple[float, float]]):
        super().__init__(message)
        self.roots = roots


class ScenarioError(InputError):
    """A scenario file is inconsistent (unknown names, missing fields)."""


class NumericalError(UncertaintyCostError, ArithmeticError):
    """Base class for numerical failures."""


class NumericRangeError(NumericalError):
    """A formula overflowed or produced a non-finite value."""


class ConvergenceError(NumericalError):
    """Fixed-point iteration hit its iteration cap.

    Carries the last iterate and its residual so callers can inspect how far
    off the solve was.
    """

    def __init__(self, message: str, last_iterate: float, residual: float, iterations: int):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.residual = residual
        self.iterations = iterations
