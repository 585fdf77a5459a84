"""Exception hierarchy for gt_gromov_width."""

from typing import Optional


class GTWidthError(Exception):
    """Base class for every error raised by this package."""


class NotHermitianError(GTWidthError, ValueError):
    """Matrix input is not Hermitian within the symmetrization threshold."""

    def __init__(self, violation: float, threshold: float):
        self.violation = violation
        self.threshold = threshold
        super().__init__(
            f"matrix is not Hermitian: max |A - A^H| = {violation:.3e} exceeds {threshold:.1e}"
        )


class EigenSolverError(GTWidthError, ArithmeticError):
    """Jacobi iteration exhausted its sweep budget."""

    def __init__(self, residual: float, sweeps: int):
        self.residual = residual
        self.sweeps = sweeps
        super().__init__(
            f"Jacobi eigensolver did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {residual:.3e})"
        )


class PreconditionError(GTWidthError, ValueError):
    """An operation was called outside its domain."""


class InterlacingError(PreconditionError):
    """Two eigenvalue lists do not interlace."""

    def __init__(self, message: str, violation: Optional[object] = None):
        self.violation = violation
        super().__init__(message)


class DegeneratePairError(PreconditionError):
    """A transposition of two equal diagonal entries gives no sphere."""


class UnsupportedSpectrumError(GTWidthError, ValueError):
    """Spectrum has two or more repeated eigenvalues."""


class SpectrumParseError(GTWidthError, ValueError):
    """Text or JSON input could not be parsed."""


class TheoremMismatchError(GTWidthError, AssertionError):
    """Computed edge-length bound disagrees with the minimal eigenvalue gap."""
