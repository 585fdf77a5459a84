"""Realize any point of the GT polytope as a Hermitian matrix.

The matrix is grown one row at a time. Each step solves an inverse
eigenvalue problem for an arrow matrix (diagonal plus one bordering row and
column) exactly over the rationals, then conjugates the border back into the
eigenbasis of the block built so far.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np
import sympy as sp

from .errors import InterlacingError
from .gtsystem import GTPattern, check_interlacing
from .hermitian import HermitianMatrix, eigh_desc

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArrowSolution:
    """Arrow matrix [[diag(b), x], [x^H, corner]] with eigenvalues a."""

    k: int
    b: Tuple[Fraction, ...]
    a: Tuple[Fraction, ...]
    squared_moduli: Tuple[Fraction, ...]
    corner: Fraction

    def to_array(self) -> np.ndarray:
        """The arrow matrix with real nonnegative border."""
        m = np.zeros((self.k + 1, self.k + 1), dtype=complex)
        m[np.arange(self.k), np.arange(self.k)] = [float(v) for v in self.b]
        border = np.sqrt([float(v) for v in self.squared_moduli])
        m[:self.k, self.k] = border
        m[self.k, :self.k] = border
        m[self.k, self.k] = float(self.corner)
        return m


def _check_arrow_input(b: Sequence[Fraction], a: Sequence[Fraction]) -> None:
    if len(a) != len(b) + 1:
        raise ValueError(f"need len(a) = len(b) + 1, got {len(a)} and {len(b)}")
    for name, values in (("a", a), ("b", b)):
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            raise ValueError(f"{name} must be sorted nonincreasing")
    for i, value in enumerate(b):
        if a[i] < value:
            raise InterlacingError(f"a_{i + 1} = {a[i]} < b_{i + 1} = {value}", (i + 1, i + 1))
        if value < a[i + 1]:
            raise InterlacingError(f"b_{i + 1} = {value} < a_{i + 2} = {a[i + 1]}", (i + 1, i + 2))


def solve_arrow(b: Sequence, a: Sequence) -> ArrowSolution:
    """
    Exact border moduli and corner for prescribed interlacing spectra.

    Pairs b_i = a_i or b_i = a_{i+1} are deflated first with |x_i|² = 0;
    the remaining problem interlaces strictly and has the closed form
    |x_i|² = -∏_m(b_i - a_m) / ∏_{j≠i}(b_i - b_j).

    Args:
        b: diagonal, nonincreasing, k entries
        a: target eigenvalues, nonincreasing, k+1 entries

    Returns:
        ArrowSolution whose characteristic polynomial is ∏(t - a_m)
    """
    b = tuple(Fraction(v) for v in b)
    a = tuple(Fraction(v) for v in a)
    _check_arrow_input(b, a)

    moduli = [Fraction(0)] * len(b)
    live_b = list(range(len(b)))
    live_a = list(a)
    deflated = True
    while deflated:
        deflated = False
        for pos, i in enumerate(live_b):
            if b[i] in (live_a[pos], live_a[pos + 1]):
                live_a.remove(b[i])
                del live_b[pos]
                deflated = True
                break

    for i in live_b:
        numerator = Fraction(1)
        for value in live_a:
            numerator *= b[i] - value
        denominator = Fraction(1)
        for j in live_b:
            if j != i:
                denominator *= b[i] - b[j]
        moduli[i] = -numerator / denominator

    corner = sum(a) - sum(b)
    if len(live_b) < len(b):
        logger.debug("arrow k=%d: deflated %d pairs", len(b), len(b) - len(live_b))
    return ArrowSolution(len(b), b, a, tuple(moduli), corner)


def verify_arrow(solution: ArrowSolution) -> bool:
    """Exact check of det(tI - M) = ∏(t - a_m) and |x_i|² ≥ 0."""
    if any(value < 0 for value in solution.squared_moduli):
        return False
    t = sp.Symbol("t")

    def q(value: Fraction) -> sp.Rational:
        return sp.Rational(value.numerator, value.denominator)

    target = sp.Mul(*[t - q(v) for v in solution.a])
    diagonal = [t - q(v) for v in solution.b]
    polynomial = (t - q(solution.corner)) * sp.Mul(*diagonal)
    for i, modulus in enumerate(solution.squared_moduli):
        polynomial -= q(modulus) * sp.Mul(*(diagonal[:i] + diagonal[i + 1:]))
    return sp.expand(target - polynomial) == 0


def reconstruct_matrix(pattern: GTPattern, tol: float) -> HermitianMatrix:
    """A Hermitian matrix A with Λ(A) = pattern.

    Starts from the 1×1 block [row 1]. Step j diagonalizes the current block
    as C diag(row j) C^H, solves the arrow problem (row j, row j+1) and
    borders the block with C·x and the arrow corner.
    """
    exact = GTPattern(
        tuple(Fraction(v) for v in pattern.top),
        tuple(tuple(Fraction(v) for v in row) for row in pattern.rows),
    )
    violations = check_interlacing(exact, 0)
    if violations:
        raise InterlacingError(f"pattern does not interlace: {violations[0]}", violations[0])

    block = np.array([[float(exact.entry(1, 1) if exact.n > 1 else exact.top[0])]], dtype=complex)
    for j in range(1, exact.n):
        solution = solve_arrow(exact.row(j), exact.row(j + 1))
        _, vectors = eigh_desc(HermitianMatrix(block), tol)
        border = vectors @ np.sqrt([float(v) for v in solution.squared_moduli])
        grown = np.zeros((j + 1, j + 1), dtype=complex)
        grown[:j, :j] = block
        grown[:j, j] = border
        grown[j, :j] = border.conj()
        grown[j, j] = float(solution.corner)
        block = grown

    logger.debug("reconstructed %dx%d matrix for λ=(%s)", exact.n, exact.n, exact.spectrum)
    return HermitianMatrix(block)
