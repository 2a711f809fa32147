"""Exception hierarchy shared by every ifsim module."""

from __future__ import annotations


class IfsError(Exception):
    """Base class for all ifsim errors."""


class InvalidIfnError(IfsError, ValueError):
    """A (mu, nu) pair violates the intuitionistic fuzzy number constraints."""


class DomainError(IfsError, ValueError):
    """An operator parameter is outside its domain (e.g. lambda <= 0)."""


class AlignmentError(IfsError, ValueError):
    """Two sets, or a set and a weight vector, do not share a universe."""


class WeightError(IfsError, ValueError):
    """A weight vector is malformed."""


class IdealConstructionError(IfsError):
    """The ideal scheme produced an invalid IFN.

    Unreachable for valid matrices; kept as a defensive check.
    """


class ParseError(IfsError):
    """Input text could not be parsed. Carries a location when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


class InputValidationError(IfsError):
    """Input parsed but failed validation. Lists every violation found."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        lines = "\n".join(f"  - {v}" for v in self.violations)
        super().__init__(f"{len(self.violations)} validation error(s):\n{lines}")
