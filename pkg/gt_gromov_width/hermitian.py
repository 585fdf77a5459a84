"""Hermitian matrices, spectra and a cyclic Jacobi eigensolver.

Points of a coadjoint orbit are Hermitian matrices with a fixed spectrum.
Everything the rest of the package needs from dense linear algebra lives
here: the immutable `HermitianMatrix` value, the exact `Spectrum`, leading
principal submatrices and a Jacobi solver with an explicit accuracy contract.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .config import Config
from .errors import EigenSolverError, NotHermitianError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Spectrum:
    """Nonincreasing list of rational eigenvalues defining an orbit."""

    values: Tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(Fraction(v) for v in self.values)
        if not values:
            raise ValueError("spectrum must contain at least one eigenvalue")
        for i in range(len(values) - 1):
            if values[i] < values[i + 1]:
                raise ValueError(
                    f"spectrum must be nonincreasing: {values[i]} < {values[i + 1]} at position {i + 1}"
                )
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def distinct_values(self) -> Tuple[Fraction, ...]:
        """Distinct eigenvalues v_1 > v_2 > ..."""
        return tuple(value for value, _ in groupby(self.values))

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        """Multiplicities l_1, ..., l_s, aligned with `distinct_values`."""
        return tuple(len(list(group)) for _, group in groupby(self.values))

    @property
    def repeated_value_count(self) -> int:
        return sum(1 for m in self.multiplicities if m > 1)

    def min_gap(self) -> Fraction:
        """min{λ_i - λ_j : λ_i > λ_j}; zero when the orbit is a point."""
        distinct = self.distinct_values
        if len(distinct) < 2:
            return Fraction(0)
        return min(distinct[i] - distinct[i + 1] for i in range(len(distinct) - 1))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Immutable complex Hermitian matrix.

    Input within `Config.HERMITIAN_TOL` (relative to the largest entry) of
    Hermitian is symmetrized; anything worse is rejected.
    """

    entries: np.ndarray

    def __post_init__(self):
        a = np.array(self.entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise ValueError(f"expected a nonempty square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix entries must be finite")

        scale = max(1.0, float(np.max(np.abs(a))))
        violation = float(np.max(np.abs(a - a.conj().T)))
        threshold = Config.HERMITIAN_TOL * scale
        if violation > threshold:
            raise NotHermitianError(violation, threshold)

        a = (a + a.conj().T) / 2
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def from_diagonal(cls, values: Sequence) -> "HermitianMatrix":
        return cls(np.diag([float(v) for v in values]).astype(complex))

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def diag(self) -> np.ndarray:
        return self.entries.diagonal().real.copy()

    def __repr__(self) -> str:
        return f"HermitianMatrix(n={self.n})"


def leading_principal_submatrix(a: HermitianMatrix, j: int) -> HermitianMatrix:
    """Top-left j×j block of `a`."""
    if not 1 <= j <= a.n:
        raise ValueError(f"submatrix size must be in 1..{a.n}, got {j}")
    return HermitianMatrix(a.entries[:j, :j])


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotation(a: np.ndarray, p: int, q: int) -> Optional[np.ndarray]:
    """2×2 unitary that annihilates a[p, q] under U* A U."""
    g = a[p, q]
    r = abs(g)
    if r == 0.0:
        return None
    phase = np.conj(g / r)
    theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
    if abs(theta) > 1e150:
        t = 1.0 / (2.0 * theta)
    else:
        t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    return np.array([[c, s], [-s * phase, c * phase]], dtype=complex)


def _jacobi(a: np.ndarray, tol: float, max_sweeps: int) -> Tuple[np.ndarray, np.ndarray]:
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    threshold = tol * float(np.linalg.norm(a))

    for sweep in range(max_sweeps + 1):
        off = _off_norm(a)
        if off <= threshold:
            logger.debug("Jacobi converged: n=%d sweeps=%d off=%.3e", n, sweep, off)
            return a.diagonal().real.copy(), v
        if sweep == max_sweeps:
            raise EigenSolverError(off, max_sweeps)

        for p in range(n - 1):
            for q in range(p + 1, n):
                u = _rotation(a, p, q)
                if u is None:
                    continue
                idx = [p, q]
                a[:, idx] = a[:, idx] @ u
                a[idx, :] = u.conj().T @ a[idx, :]
                v[:, idx] = v[:, idx] @ u
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

    raise EigenSolverError(_off_norm(a), max_sweeps)  # pragma: no cover


def eigh_desc(
    a: HermitianMatrix,
    tol: float,
    max_sweeps: Optional[int] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigenvalues (nonincreasing) and matching orthonormal eigenvectors.

    Sweeps stop once the off-diagonal Frobenius norm is at most
    tol·‖A‖_F, so every returned value is within tol·(1+‖A‖_F) of an
    eigenvalue of `a`.

    Args:
        a: Hermitian input
        tol: relative convergence threshold, > 0
        max_sweeps: sweep budget (default `Config.MAX_SWEEPS`)

    Returns:
        Tuple of (values, vectors) with vectors[:, i] belonging to values[i]
    """
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    sweeps = Config.MAX_SWEEPS if max_sweeps is None else max_sweeps
    values, vectors = _jacobi(a.entries, tol, sweeps)
    order = np.argsort(-values, kind="stable")
    return values[order], vectors[:, order]


def eigenvalues_desc(a: HermitianMatrix, tol: float, max_sweeps: Optional[int] = None) -> List[float]:
    """Eigenvalues of `a` in nonincreasing order."""
    values, _ = eigh_desc(a, tol, max_sweeps)
    return [float(x) for x in values]


# ---- Sampling helpers ----

def random_hermitian(n: int, rng: np.random.Generator) -> HermitianMatrix:
    """Hermitian matrix with real and imaginary parts drawn from [-1, 1]."""
    x = rng.uniform(-1.0, 1.0, (n, n)) + 1j * rng.uniform(-1.0, 1.0, (n, n))
    return HermitianMatrix((x + x.conj().T) / 2)


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary from the QR factorization of a complex Gaussian."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = r.diagonal()
    return q * (d / np.abs(d))


def orbit_matrix(spectrum: Spectrum, u: np.ndarray) -> HermitianMatrix:
    """U·diag(λ)·U*, a point of the orbit of `spectrum`."""
    d = np.diag([float(v) for v in spectrum.values])
    return HermitianMatrix(u @ d @ u.conj().T)
