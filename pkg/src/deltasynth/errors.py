"""Exception hierarchy.

InvariantError subclasses mark conditions the algorithm proves impossible for
genuine unitary inputs; reaching one means the input lied or the engine has a
bug, and the CLI maps them to exit code 4.
"""

from __future__ import annotations


class SynthError(Exception):
    """Base class for everything raised by this package."""


class MatrixParseError(SynthError):
    """Malformed matrix file (CLI exit code 2)."""

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.line = line
        self.column = column
        if line:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class CircuitParseError(SynthError):
    """Malformed circuit file (CLI exit code 2)."""

    def __init__(self, message: str, line: int = 0) -> None:
        self.line = line
        if line:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotUnitaryError(SynthError):
    """Input matrix is not exactly unitary (CLI exit code 3)."""


class InvariantError(SynthError):
    """Internal invariant violated (CLI exit code 4)."""


class NonMonomialError(InvariantError):
    """A matrix with delta-exponent 0 was not one unit entry per row/column."""


class UnreachablePatternError(InvariantError):
    """Residue pattern that unitarity rules out."""


class PhaseAlignmentError(InvariantError):
    """No single omega power aligns two unit residue rows."""


class ExponentOneError(InvariantError):
    """Least delta-exponent 1, impossible for a unitary matrix."""


class ImpossibleBranchError(InvariantError):
    """Case-analysis branch whose preconditions unitarity excludes."""


class NoProgressError(InvariantError):
    """A reduction round failed to lower the delta-exponent in time."""


class TemplateError(InvariantError):
    """A gate template's body does not multiply out to its target matrix."""


class UnsupportedDimError(SynthError):
    """Operation undefined for this matrix dimension."""


class VerificationError(InvariantError):
    """A requested exactness re-check failed."""
