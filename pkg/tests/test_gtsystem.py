from fractions import Fraction

import pytest

from gt_gromov_width.gtsystem import (
    GTPattern,
    check_interlacing,
    coordinate_count,
    coordinate_index,
    gt_map,
    gt_of_diagonal,
    midpoint_pattern,
    orbit_spec,
    positions,
    project_to_diagonal,
    random_spectrum,
    sample_pattern,
)
from gt_gromov_width.gtpolytope import enumerate_fixed_points
from gt_gromov_width.hermitian import HermitianMatrix, Spectrum, orbit_matrix, random_hermitian, random_unitary


def test_coordinate_order():
    assert coordinate_count(3) == 3
    assert positions(3) == [(2, 1), (2, 2), (1, 1)]
    assert [coordinate_index(3, j, k) for j, k in positions(3)] == [0, 1, 2]
    assert [coordinate_index(6, j, k) for j, k in positions(6)] == list(range(15))


def test_coordinate_index_out_of_range():
    with pytest.raises(ValueError):
        coordinate_index(3, 3, 1)
    with pytest.raises(ValueError):
        coordinate_index(3, 1, 2)


class TestPattern:
    def test_vector_roundtrip(self):
        pattern = GTPattern((5, 5, 4), ((5,), (5, 4)))
        assert pattern.to_vector() == (5, 4, 5)
        assert GTPattern.from_vector((5, 5, 4), (5, 4, 5)) == pattern

    def test_rows(self):
        pattern = GTPattern((3, 2, 1), ((2,), (3, 1)))
        assert pattern.row(0) == ()
        assert pattern.row(3) == (3, 2, 1)
        assert pattern.entry(2, 2) == 1
        with pytest.raises(ValueError):
            pattern.row(4)

    @pytest.mark.parametrize(
        "top, rows",
        [
            ((), ()),
            ((3, 2, 1), ((2,),)),
            ((3, 2, 1), ((2,), (3,))),
            ((3, 2, 1), ((2,), (1, 3))),
        ],
    )
    def test_rejects_malformed(self, top, rows):
        with pytest.raises(ValueError):
            GTPattern(top, rows)

    def test_exactness_flag(self):
        assert gt_of_diagonal((3, 2, 1)).is_exact
        assert not GTPattern((3.0, 1.0), ((2.0,),)).is_exact


def test_gt_of_diagonal_display_example():
    pattern = gt_of_diagonal((1, 5, 3, 4, 4, 4))
    assert pattern.rows == ((1,), (5, 1), (5, 3, 1), (5, 4, 3, 1), (5, 4, 4, 3, 1))
    assert pattern.top == (5, 4, 4, 4, 3, 1)
    assert all(isinstance(x, Fraction) for x in pattern.to_vector())


@pytest.mark.parametrize("d", [(3, 2, 1), (1, 5, 3, 4, 4, 4), ("1/2", 7, -2)])
def test_projection_recovers_diagonal(d):
    assert project_to_diagonal(gt_of_diagonal(d)) == [Fraction(x) for x in d]


def test_check_interlacing_finds_violation():
    pattern = GTPattern((5, 5, 4), ((6,), (5, 4)))
    violations = check_interlacing(pattern)
    assert [(v.label, v.j, v.k) for v in violations] == [("A", 1, 1)]
    assert violations[0].slack == -1
    assert str(violations[0]) == "A_{1,1} (slack -1)"


def test_check_interlacing_tolerance():
    pattern = GTPattern((5.0, 4.0), ((5.0 + 1e-10,),))
    assert check_interlacing(pattern, 1e-8) == []
    assert len(check_interlacing(pattern, 0)) == 1


class TestGTMap:
    def test_diagonal(self):
        pattern = gt_map(HermitianMatrix.from_diagonal([2, 3, 1]), 1e-12)
        assert pattern.rows == ((2.0,), (3.0, 2.0))
        assert pattern.top == (3.0, 2.0, 1.0)

    def test_orbit_points_interlace(self, rng):
        spectrum = Spectrum((3, 1, 0))
        for _ in range(20):
            a = orbit_matrix(spectrum, random_unitary(3, rng))
            pattern = gt_map(a, 1e-12)
            assert check_interlacing(pattern, 1e-8) == []
            assert pattern.top == pytest.approx([3.0, 1.0, 0.0], abs=1e-9)
            assert project_to_diagonal(pattern) == pytest.approx(list(a.diag()), abs=1e-9)

    def test_projection_is_the_diagonal(self, rng):
        for _ in range(500):
            a = random_hermitian(int(rng.integers(1, 7)), rng)
            assert project_to_diagonal(gt_map(a, 1e-12)) == pytest.approx(list(a.diag()), abs=1e-9)

    def test_random_matrices_interlace(self, rng):
        for _ in range(100):
            pattern = gt_map(random_hermitian(5, rng), 1e-12)
            assert check_interlacing(pattern, 1e-9) == []

    @pytest.mark.parametrize("values", [(5, 4, 4, 4, 3, 1), (3, 2, 1, 0), (5, 5, 4)])
    def test_diagonal_matches_exact_pattern(self, values):
        for arrangement in enumerate_fixed_points(Spectrum(values)):
            numeric = gt_map(HermitianMatrix.from_diagonal(arrangement), 1e-12)
            assert numeric.max_abs_difference(gt_of_diagonal(arrangement)) <= 1e-12


class TestOrbitSpec:
    def test_display_example(self):
        spec = orbit_spec(Spectrum((5, 4, 4, 4, 3, 1)))
        assert spec.N == 15
        assert spec.D == 12
        assert spec.orbit_dimension == 24
        assert spec.forced_map == {(5, 2): 4, (5, 3): 4, (4, 2): 4}

    def test_one_repeat_at_the_top(self):
        spec = orbit_spec(Spectrum((5, 5, 4)))
        assert (spec.N, spec.D) == (3, 2)
        assert spec.forced_map == {(2, 1): 5}
        assert spec.forced_value(2, 2) is None

    def test_generic(self):
        spec = orbit_spec(Spectrum((3, 2, 1)))
        assert spec.D == spec.N == 3
        assert spec.forced_constants == ()

    def test_point_orbit(self):
        spec = orbit_spec(Spectrum((4, 4, 4)))
        assert spec.D == 0
        assert len(spec.forced_constants) == spec.N == 3

    @pytest.mark.parametrize("values", [(4, 4, 3, 3), (2, 2, 2, 1, 1), (6, 6, 6, 6, 0)])
    def test_forced_count_formula(self, values):
        spectrum = Spectrum(values)
        expected = sum(m * (m - 1) // 2 for m in spectrum.multiplicities)
        assert len(orbit_spec(spectrum).forced_constants) == expected


def test_midpoint_pattern():
    pattern = midpoint_pattern(Spectrum((3, 2, 1)))
    assert pattern.rows == ((2,), (Fraction(5, 2), Fraction(3, 2)))


def test_sample_pattern_interlaces_exactly(rng):
    spectrum = Spectrum((5, 4, 4, 4, 3, 1))
    for _ in range(50):
        pattern = sample_pattern(spectrum, rng)
        assert pattern.is_exact
        assert check_interlacing(pattern, 0) == []
        assert pattern.top == spectrum.values


def test_random_spectrum(rng):
    for _ in range(100):
        n = int(rng.integers(1, 7))
        spectrum = random_spectrum(rng, n)
        assert spectrum.n == n
        assert spectrum.repeated_value_count <= 1
