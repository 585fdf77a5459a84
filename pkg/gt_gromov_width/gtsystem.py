"""Gelfand-Tsetlin patterns, the GT map Λ and orbit combinatorics.

Coordinates of ℝ^N are ordered row-major from row n-1 down to row 1:
(x^{(n-1)}_1, ..., x^{(n-1)}_{n-1}, x^{(n-2)}_1, ..., x^{(1)}_1).
Every module in the package uses this order.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .hermitian import HermitianMatrix, Spectrum, eigenvalues_desc, leading_principal_submatrix

logger = logging.getLogger(__name__)

Number = Union[Fraction, float]
Position = Tuple[int, int]


def coordinate_count(n: int) -> int:
    """N = n(n-1)/2."""
    return n * (n - 1) // 2


def coordinate_index(n: int, j: int, k: int) -> int:
    """Index of x^{(j)}_k in the shared coordinate order."""
    if not (1 <= j <= n - 1 and 1 <= k <= j):
        raise ValueError(f"no GT coordinate ({j},{k}) for n={n}")
    return coordinate_count(n) - j * (j + 1) // 2 + (k - 1)


def positions(n: int) -> List[Position]:
    """All (j, k) in coordinate order."""
    return [(j, k) for j in range(n - 1, 0, -1) for k in range(1, j + 1)]


@dataclass(frozen=True)
class GTPattern:
    """Triangular array {λ^{(j)}_k}, rows 1..n-1, with `top` serving as row n.

    Entries are `Fraction` in exact mode and `float` for patterns read off
    numerically diagonalized matrices.
    """

    top: Tuple[Number, ...]
    rows: Tuple[Tuple[Number, ...], ...]

    def __post_init__(self):
        top = tuple(self.top)
        rows = tuple(tuple(row) for row in self.rows)
        n = len(top)
        if n == 0:
            raise ValueError("pattern needs a nonempty top row")
        if len(rows) != n - 1:
            raise ValueError(f"pattern with top of length {n} needs {n - 1} rows, got {len(rows)}")
        for j, row in enumerate(rows, start=1):
            if len(row) != j:
                raise ValueError(f"row {j} must have {j} entries, got {len(row)}")
        for j, row in enumerate(rows + (top,), start=1):
            if any(row[k] < row[k + 1] for k in range(len(row) - 1)):
                raise ValueError(f"row {j} is not sorted nonincreasing: {row}")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.top)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(x, Fraction) for row in self.rows + (self.top,) for x in row)

    @property
    def spectrum(self) -> Spectrum:
        return Spectrum(self.top)

    def row(self, j: int) -> Tuple[Number, ...]:
        """Row j, with row 0 empty and row n the top."""
        if j == 0:
            return ()
        if j == self.n:
            return self.top
        if not 1 <= j < self.n:
            raise ValueError(f"row index must be in 0..{self.n}, got {j}")
        return self.rows[j - 1]

    def entry(self, j: int, k: int) -> Number:
        return self.row(j)[k - 1]

    def to_vector(self) -> Tuple[Number, ...]:
        return tuple(self.entry(j, k) for j, k in positions(self.n))

    @classmethod
    def from_vector(cls, top: Sequence[Number], vector: Sequence[Number]) -> "GTPattern":
        n = len(top)
        if len(vector) != coordinate_count(n):
            raise ValueError(f"expected {coordinate_count(n)} coordinates, got {len(vector)}")
        rows = [[None] * j for j in range(1, n)]
        for (j, k), value in zip(positions(n), vector):
            rows[j - 1][k - 1] = value
        return cls(tuple(top), tuple(tuple(r) for r in rows))

    def max_abs_difference(self, other: "GTPattern") -> float:
        if other.n != self.n:
            raise ValueError("patterns have different sizes")
        mine = self.to_vector() + self.top
        theirs = other.to_vector() + other.top
        return max((abs(float(a) - float(b)) for a, b in zip(mine, theirs)), default=0.0)


@dataclass(frozen=True)
class OrbitSpec:
    """Dimension data of the orbit through λ."""

    spectrum: Spectrum
    N: int
    D: int
    orbit_dimension: int
    forced_constants: Tuple[Tuple[Position, Fraction], ...]
    repeated_value_count: int

    def forced_value(self, j: int, k: int) -> Optional[Fraction]:
        return self.forced_map.get((j, k))

    @property
    def forced_map(self) -> Dict[Position, Fraction]:
        return dict(self.forced_constants)


@dataclass(frozen=True)
class InterlacingViolation:
    """A failed inequality A_{j,k} or B_{j,k} with its signed slack."""

    label: str
    j: int
    k: int
    slack: Number

    def __str__(self) -> str:
        return f"{self.label}_{{{self.j},{self.k}}} (slack {self.slack})"


# ---- The GT map ----

def gt_map(a: HermitianMatrix, tol: float) -> GTPattern:
    """Λ(A): sorted eigenvalues of every leading principal submatrix."""
    rows = tuple(
        tuple(eigenvalues_desc(leading_principal_submatrix(a, j), tol)) for j in range(1, a.n)
    )
    return GTPattern(tuple(eigenvalues_desc(a, tol)), rows)


def gt_of_diagonal(d: Sequence) -> GTPattern:
    """Exact Λ(diag(d)): row j is d_1..d_j sorted nonincreasing."""
    d = [Fraction(x) for x in d]
    if not d:
        raise ValueError("diagonal must be nonempty")
    rows = tuple(tuple(sorted(d[:j], reverse=True)) for j in range(1, len(d)))
    return GTPattern(tuple(sorted(d, reverse=True)), rows)


def project_to_diagonal(pattern: GTPattern) -> List[Number]:
    """pr: entry k is sum(row k) - sum(row k-1); equals diag(A) when pattern = Λ(A)."""
    return [sum(pattern.row(k)) - sum(pattern.row(k - 1)) for k in range(1, pattern.n + 1)]


def check_interlacing(pattern: GTPattern, tol: float = 0) -> List[InterlacingViolation]:
    """Every A_{j,k} or B_{j,k} violated by more than `tol`."""
    violations = []
    for j in range(1, pattern.n):
        upper = pattern.row(j + 1)
        for k in range(1, j + 1):
            x = pattern.entry(j, k)
            slack_a = upper[k - 1] - x
            slack_b = x - upper[k]
            if slack_a < -tol:
                violations.append(InterlacingViolation("A", j, k, slack_a))
            if slack_b < -tol:
                violations.append(InterlacingViolation("B", j, k, slack_b))
    return violations


# ---- Orbit combinatorics ----

def orbit_spec(spectrum: Spectrum) -> OrbitSpec:
    """N, D = Σ_{i<j} l_i l_j and the coordinates pinned by interlacing."""
    n = spectrum.n
    mult = spectrum.multiplicities
    d = sum(mult[i] * mult[j] for i in range(len(mult)) for j in range(i + 1, len(mult)))

    # Propagate interval bounds down from row n: x^{(j)}_k ∈ [lo(j+1,k+1), hi(j+1,k)].
    hi = list(spectrum.values)
    lo = list(spectrum.values)
    forced = []
    for j in range(n - 1, 0, -1):
        hi = hi[:j]
        lo = lo[1:j + 1]
        forced.extend(((j, k + 1), hi[k]) for k in range(j) if hi[k] == lo[k])

    return OrbitSpec(
        spectrum=spectrum,
        N=coordinate_count(n),
        D=d,
        orbit_dimension=2 * d,
        forced_constants=tuple(forced),
        repeated_value_count=spectrum.repeated_value_count,
    )


# ---- Exact sample points ----

def midpoint_pattern(spectrum: Spectrum) -> GTPattern:
    """Pattern with every entry at the midpoint of its interlacing interval.

    An inequality is tight here only when it is tight on the whole polytope.
    """
    row = list(spectrum.values)
    rows = []
    for j in range(spectrum.n - 1, 0, -1):
        row = [(row[k] + row[k + 1]) / 2 for k in range(j)]
        rows.append(tuple(row))
    return GTPattern(spectrum.values, tuple(reversed(rows)))


def sample_pattern(spectrum: Spectrum, rng: np.random.Generator, denominator: int = 4) -> GTPattern:
    """Random exact point of the GT polytope by nested interlacing.

    Each entry is lo + (hi - lo)·m/denominator with m uniform in 0..denominator,
    so faces (m = 0 or m = denominator) are hit with positive probability.
    """
    row = list(spectrum.values)
    rows = []
    for j in range(spectrum.n - 1, 0, -1):
        row = [
            row[k + 1] + (row[k] - row[k + 1]) * Fraction(int(rng.integers(0, denominator + 1)), denominator)
            for k in range(j)
        ]
        rows.append(tuple(row))
    return GTPattern(spectrum.values, tuple(reversed(rows)))


def random_spectrum(
    rng: np.random.Generator,
    n: int,
    max_multiplicity: Optional[int] = None,
    value_range: int = 12,
) -> Spectrum:
    """Random rational spectrum of size n with at most one repeated value."""
    top = n - 1 if max_multiplicity is None else max_multiplicity
    multiplicity = int(rng.integers(1, max(top, 1) + 1)) if n > 1 else 1
    distinct_count = n - multiplicity + 1
    denominator = int(rng.integers(1, 4))
    numerators = rng.choice(np.arange(-value_range * denominator, value_range * denominator + 1),
                            size=distinct_count, replace=False)
    distinct = sorted((Fraction(int(x), denominator) for x in numerators), reverse=True)
    repeated = int(rng.integers(0, distinct_count))
    values = []
    for i, v in enumerate(distinct):
        values.extend([v] * (multiplicity if i == repeated else 1))
    return Spectrum(tuple(values))
