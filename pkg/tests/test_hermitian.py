from fractions import Fraction

import numpy as np
import pytest

from gt_gromov_width.errors import EigenSolverError, NotHermitianError
from gt_gromov_width.hermitian import (
    HermitianMatrix,
    Spectrum,
    eigenvalues_desc,
    eigh_desc,
    leading_principal_submatrix,
    orbit_matrix,
    random_hermitian,
    random_unitary,
)


class TestSpectrum:
    def test_values_become_fractions(self):
        spectrum = Spectrum((3, "1/2", 0))
        assert spectrum.values == (Fraction(3), Fraction(1, 2), Fraction(0))
        assert str(spectrum) == "3,1/2,0"

    @pytest.mark.parametrize("values", [(), (1, 2), (3, 1, 2)])
    def test_rejects_empty_or_increasing(self, values):
        with pytest.raises(ValueError):
            Spectrum(values)

    def test_multiplicities(self):
        spectrum = Spectrum((5, 4, 4, 4, 3, 1))
        assert spectrum.distinct_values == (5, 4, 3, 1)
        assert spectrum.multiplicities == (1, 3, 1, 1)
        assert spectrum.repeated_value_count == 1
        assert spectrum.min_gap() == 1

    def test_two_repeated_values(self):
        assert Spectrum((4, 4, 3, 3)).repeated_value_count == 2

    @pytest.mark.parametrize(
        "values, gap",
        [((4, 4, 4), 0), ((7,), 0), ((3, 1), 2), ((5, 5, 4), 1), (("7/2", "1/2", 0), Fraction(1, 2))],
    )
    def test_min_gap(self, values, gap):
        assert Spectrum(values).min_gap() == gap


class TestHermitianMatrix:
    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            HermitianMatrix(np.zeros((2, 3)))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            HermitianMatrix(np.array([[np.nan]]))

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError) as excinfo:
            HermitianMatrix(np.array([[1.0, 2.0], [0.0, 1.0]]))
        assert excinfo.value.violation == pytest.approx(2.0)

    def test_symmetrizes_rounding_noise(self):
        a = HermitianMatrix(np.array([[1.0, 2.0 + 1e-14], [2.0, 1.0]]))
        assert np.array_equal(a.entries, a.entries.conj().T)
        assert not a.entries.flags.writeable

    def test_from_diagonal(self):
        a = HermitianMatrix.from_diagonal([Fraction(5), 3, 1])
        assert a.n == 3
        assert list(a.diag()) == [5.0, 3.0, 1.0]

    def test_leading_principal_submatrix(self):
        a = HermitianMatrix(np.arange(9, dtype=float).reshape(3, 3) + np.arange(9).reshape(3, 3).T)
        assert leading_principal_submatrix(a, 2).n == 2
        with pytest.raises(ValueError):
            leading_principal_submatrix(a, 0)
        with pytest.raises(ValueError):
            leading_principal_submatrix(a, 4)


class TestEigensolver:
    def test_diagonal_sorted(self):
        assert eigenvalues_desc(HermitianMatrix.from_diagonal([1, 3, 2]), 1e-12) == [3.0, 2.0, 1.0]

    def test_two_by_two(self):
        values = eigenvalues_desc(HermitianMatrix(np.array([[2.0, 1.0], [1.0, 2.0]])), 1e-12)
        assert values == pytest.approx([3.0, 1.0], abs=1e-12)

    def test_complex_entries(self):
        a = HermitianMatrix(np.array([[1.0, 1j], [-1j, 1.0]]))
        assert eigenvalues_desc(a, 1e-12) == pytest.approx([2.0, 0.0], abs=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_matches_lapack(self, rng, n):
        for _ in range(10):
            a = random_hermitian(n, rng)
            expected = np.linalg.eigvalsh(a.entries)[::-1]
            assert eigenvalues_desc(a, 1e-12) == pytest.approx(list(expected), abs=1e-10)

    def test_vectors_diagonalize(self, rng):
        a = random_hermitian(5, rng)
        values, vectors = eigh_desc(a, 1e-12)
        assert np.allclose(vectors.conj().T @ vectors, np.eye(5), atol=1e-10)
        assert np.allclose(a.entries @ vectors, vectors * values, atol=1e-10)
        assert all(values[i] >= values[i + 1] for i in range(4))

    def test_repeated_eigenvalue_vectors_stay_orthonormal(self, rng):
        a = orbit_matrix(Spectrum((5, 5, 5, 1)), random_unitary(4, rng))
        values, vectors = eigh_desc(a, 1e-12)
        assert values == pytest.approx([5, 5, 5, 1], abs=1e-10)
        assert np.allclose(vectors.conj().T @ vectors, np.eye(4), atol=1e-10)

    def test_sweep_budget_exhausted(self):
        a = HermitianMatrix(np.array([[2.0, 1.0], [1.0, 2.0]]))
        with pytest.raises(EigenSolverError) as excinfo:
            eigh_desc(a, 1e-12, max_sweeps=0)
        assert excinfo.value.sweeps == 0
        assert excinfo.value.residual > 0

    def test_rejects_non_positive_tolerance(self):
        with pytest.raises(ValueError):
            eigh_desc(HermitianMatrix.from_diagonal([1]), 0.0)


def test_random_unitary_is_unitary(rng):
    u = random_unitary(4, rng)
    assert np.allclose(u.conj().T @ u, np.eye(4), atol=1e-12)


def test_orbit_matrix_has_the_spectrum(rng):
    spectrum = Spectrum((3, 1, 0))
    a = orbit_matrix(spectrum, random_unitary(3, rng))
    assert eigenvalues_desc(a, 1e-12) == pytest.approx([3.0, 1.0, 0.0], abs=1e-10)


def test_trace_is_the_eigenvalue_sum(rng):
    for _ in range(1000):
        a = random_hermitian(int(rng.integers(1, 9)), rng)
        scale = 1.0 + np.linalg.norm(a.entries)
        assert sum(eigenvalues_desc(a, 1e-12)) == pytest.approx(np.trace(a.entries).real, abs=1e-10 * scale)


def test_eigenvalues_invariant_under_unitary_conjugation(rng):
    for _ in range(100):
        n = int(rng.integers(1, 7))
        a = random_hermitian(n, rng)
        u = random_unitary(n, rng)
        conjugated = HermitianMatrix(u @ a.entries @ u.conj().T)
        scale = 1.0 + np.linalg.norm(a.entries)
        assert eigenvalues_desc(conjugated, 1e-12) == pytest.approx(eigenvalues_desc(a, 1e-12), abs=1e-10 * scale)
