"""
Exception hierarchy for the spectral problems toolkit.

Every error raised on bad input derives from ``SpectralProblemError`` so the
command-line entry point can map the whole family to exit code 2.
"""
from typing import Optional


class SpectralProblemError(Exception):
    """Base class for all library errors."""


class InvalidPartitionError(SpectralProblemError, ValueError):
    """Partition is not weakly decreasing, has negative parts, or leaves its box."""


class InvalidSubsetError(SpectralProblemError, ValueError):
    """Schubert index is not a sorted subset of {1, ..., n}."""


class InvalidSpectrumError(SpectralProblemError, ValueError):
    """Spectrum is empty, not finite or not sorted descending."""


class DimensionMismatchError(SpectralProblemError, ValueError):
    """Operands live in different dimensions."""


class MultiplicityOverflowError(SpectralProblemError, ArithmeticError):
    """A multiplicity counter exceeded the 64-bit bound."""


class NormalizationError(SpectralProblemError, ValueError):
    """Unitary exponents admit no lift satisfying the normalization."""


class NonHermitianError(SpectralProblemError, ValueError):
    """Matrix is not Hermitian within tolerance."""


class NonUnitaryError(SpectralProblemError, ValueError):
    """Matrix is not unitary within tolerance."""


class ConvergenceError(SpectralProblemError, RuntimeError):
    """Iterative eigensolver hit its sweep cap."""


class InvariantViolationError(SpectralProblemError, AssertionError):
    """Internal invariant broken; indicates a bug rather than bad input."""


class InputParseError(SpectralProblemError, ValueError):
    """Command-line value could not be parsed."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
