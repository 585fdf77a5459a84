"""End-to-end checks of the width bound and its supporting constructions on seeded random data."""

from fractions import Fraction

import numpy as np
import pytest

from gt_gromov_width.errors import UnsupportedSpectrumError
from gt_gromov_width.gtpolytope import (
    VERTEX,
    classify_point,
    edge_rays,
    face_certificate,
    gromov_lower_bound,
    hrep,
    wall_is_special,
)
from gt_gromov_width.gtsystem import (
    gt_map,
    gt_of_diagonal,
    orbit_spec,
    project_to_diagonal,
    random_spectrum,
    sample_pattern,
)
from gt_gromov_width.hermitian import Spectrum
from gt_gromov_width.polytope_oracle import oracle_edges
from gt_gromov_width.reconstruct import reconstruct_matrix, solve_arrow, verify_arrow
from gt_gromov_width.skeleton import edge_pattern_at, sphere_point, trace_edge


@pytest.fixture(scope="module")
def random_spectra():
    rng = np.random.default_rng(7)
    return [random_spectrum(rng, int(rng.integers(2, 7))) for _ in range(200)]


def d_formula(spectrum):
    m = spectrum.multiplicities
    return sum(m[i] * m[j] for i in range(len(m)) for j in range(i + 1, len(m)))


def test_bound_equals_min_gap(random_spectra):
    for spectrum in random_spectra:
        bound, report = gromov_lower_bound(spectrum)
        assert bound == spectrum.min_gap(), str(spectrum)
        assert report.min_gap == bound


def test_good_vertex_has_d_edges(random_spectra):
    for spectrum in random_spectra:
        _, rays = edge_rays(spectrum)
        assert len(rays) == d_formula(spectrum) == orbit_spec(spectrum).D
        assert all(ray.length > 0 for ray in rays)


def test_edge_lengths_attain_min_gap(random_spectra):
    for spectrum in random_spectra:
        gap = spectrum.min_gap()
        lengths = [ray.length for ray in edge_rays(spectrum)[1]]
        assert min(lengths) == gap
        assert all(isinstance(c, Fraction) for c in lengths)


def test_worked_example_certificate():
    polytope = hrep(Spectrum((5, 5, 4)))
    assert classify_point(polytope, (5, 4, 5)).kind == VERTEX
    certificate = face_certificate(polytope, (5, 4, 5))
    assert certificate.normal == (-2, -1, 1)
    assert certificate.rhs == -9
    assert sum(c * x for c, x in zip(certificate.normal, (5, 4, 5))) == -9


def test_display_example():
    spectrum = Spectrum((5, 4, 4, 4, 3, 1))
    pattern = gt_of_diagonal((1, 5, 3, 4, 4, 4))
    assert pattern.rows == ((1,), (5, 1), (5, 3, 1), (5, 4, 3, 1), (5, 4, 4, 3, 1))
    spec = orbit_spec(spectrum)
    assert (spec.N, len(spec.forced_constants), spec.D) == (15, 3, 12)
    assert set(spec.forced_map) == {(5, 2), (5, 3), (4, 2)}
    walls = {(j, k) for j in range(2, 6) for k in range(1, j) if wall_is_special(spectrum, j, k)}
    assert walls == {(5, 2)}


@pytest.mark.parametrize("values", [(3, 1, 0), (5, 5, 4), (4, 2, 1, 0)])
def test_surjectivity_roundtrip(tight_tol, values):
    rng = np.random.default_rng(11)
    spectrum = Spectrum(values)
    for _ in range(100):
        pattern = sample_pattern(spectrum, rng)
        for j in range(1, spectrum.n):
            assert verify_arrow(solve_arrow(pattern.row(j), pattern.row(j + 1)))
        realized = gt_map(reconstruct_matrix(pattern, tight_tol), tight_tol)
        assert realized.max_abs_difference(pattern) <= 1e-8


@pytest.mark.parametrize(
    "values",
    [(3, 1), (5, 5, 4), (3, 2, 1), (3, 1, 0), (4, 4, 4), (5, 5, 5, 1), (4, 2, 1, 0), (6, 3, 3, 0), ("5/2", 1, 1, 1)],
)
def test_oracle_equivalence(values):
    spectrum = Spectrum(values)
    vertex, rays = edge_rays(spectrum)
    brute = oracle_edges(hrep(spectrum), vertex.pattern.to_vector())
    assert {(ray.direction, ray.length) for ray in rays} == {(e.direction, e.length) for e in brute}


def test_sphere_consistency(tight_tol):
    rng = np.random.default_rng(13)
    for _ in range(500):
        n = int(rng.integers(2, 7))
        spectrum = random_spectrum(rng, n)
        if len(spectrum.distinct_values) < 2:
            continue
        arrangement = tuple(rng.permutation(np.array(spectrum.values, dtype=object)))
        pairs = [(p, q) for p in range(1, n) for q in range(p + 1, n + 1) if arrangement[p - 1] != arrangement[q - 1]]
        p, q = pairs[int(rng.integers(0, len(pairs)))]
        z = complex(int(rng.integers(-12, 13)) / 4, int(rng.integers(-12, 13)) / 4)
        point = sphere_point(arrangement, p, q, z)
        vi, vk = arrangement[p - 1], arrangement[q - 1]
        assert point.block_trace == vi + vk
        assert point.block_determinant == vi * vk

    for values in [(5, 5, 4), (3, 2, 1), (6, 4, 4, 1), (7, 5, 2, 2, 2, 0)]:
        spectrum = Spectrum(values)
        vertex, rays = edge_rays(spectrum)
        for ray in rays:
            p, q = ray.pair
            vi = vertex.arrangement[p - 1]
            for rho, pattern in trace_edge(vertex.arrangement, p, q, 5, tight_tol):
                assert pattern.max_abs_difference(edge_pattern_at(vertex.arrangement, p, q, rho)) <= 1e-8
                shift = np.array(project_to_diagonal(pattern)) - np.array([float(x) for x in vertex.arrangement])
                expected = np.zeros(spectrum.n)
                expected[p - 1], expected[q - 1] = -float(vi - rho), float(vi - rho)
                assert np.max(np.abs(shift - expected)) <= 1e-8


@pytest.mark.parametrize(
    "values, bound",
    [((9, 2), 7), (("3/2", "-1/2"), 2), ((4, 4, 1), 3), ((4, 1, 1), 3), ((6, 2, 1), 1), ((6, 3, 0), 3)],
)
def test_low_dimensional_table(values, bound):
    assert gromov_lower_bound(Spectrum(values))[0] == bound


def test_grassmannian_row_is_unsupported():
    with pytest.raises(UnsupportedSpectrumError):
        gromov_lower_bound(Spectrum((2, 2, 1, 1)))
