"""The permutahedron's 1-skeleton and the torus-invariant spheres joining its vertices."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .config import Config
from .errors import DegeneratePairError, PreconditionError
from .gtpolytope import Vector, edge_directions_at_good_vertex, enumerate_fixed_points, is_good_arrangement
from .gtsystem import GTPattern, gt_map, gt_of_diagonal, orbit_spec
from .hermitian import HermitianMatrix, Spectrum

logger = logging.getLogger(__name__)

ZValue = Union[complex, float, int, Fraction, Tuple[Fraction, Fraction]]


@dataclass(frozen=True)
class SkeletonEdge:
    u: int
    v: int
    pair: Tuple[int, int]
    weight: Tuple[int, ...]
    length: Fraction


@dataclass(frozen=True)
class SkeletonGraph:
    spectrum: Spectrum
    vertices: Tuple[Vector, ...]
    edges: Tuple[SkeletonEdge, ...]

    def degree(self, index: int) -> int:
        return sum(1 for e in self.edges if index in (e.u, e.v))


@dataclass(frozen=True, eq=False)
class SpherePoint:
    """F_z = I_z F I_z^{-1}: the point z of the sphere through F and its (p,q)-swap.

    `block_trace` and `block_determinant` are exact for rational z.
    """

    arrangement: Vector
    p: int
    q: int
    z: ZValue
    matrix: HermitianMatrix
    rho: Fraction
    block_trace: Fraction
    block_determinant: Fraction


def skeleton_graph(spectrum: Spectrum) -> SkeletonGraph:
    """Vertices in lexicographic order; edges join arrangements one transposition apart."""
    vertices = tuple(enumerate_fixed_points(spectrum))
    index = {v: i for i, v in enumerate(vertices)}
    n = spectrum.n

    edges = []
    for i, u in enumerate(vertices):
        for p in range(1, n):
            for q in range(p + 1, n + 1):
                if u[p - 1] == u[q - 1]:
                    continue
                swapped = list(u)
                swapped[p - 1], swapped[q - 1] = swapped[q - 1], swapped[p - 1]
                j = index[tuple(swapped)]
                if i < j:
                    weight = [0] * n
                    weight[p - 1], weight[q - 1] = -1, 1
                    edges.append(SkeletonEdge(i, j, (p, q), tuple(weight), abs(u[p - 1] - u[q - 1])))
    return SkeletonGraph(spectrum, vertices, tuple(edges))


def _is_infinite(z: ZValue) -> bool:
    return isinstance(z, (float, complex)) and math.isinf(abs(z))


def _z_parts(z: ZValue) -> Tuple[Fraction, Fraction]:
    """Exact (re, im) of z; a (re, im) pair gives exact complex values."""
    if isinstance(z, tuple):
        if len(z) != 2:
            raise ValueError(f"z as a pair must be (re, im), got {z!r}")
        return Fraction(z[0]), Fraction(z[1])
    if isinstance(z, (int, Fraction)):
        return Fraction(z), Fraction(0)
    zc = complex(z)
    return Fraction(zc.real), Fraction(zc.imag)


def _check_pair(arrangement: Sequence, p: int, q: int) -> Tuple[Fraction, Fraction]:
    n = len(arrangement)
    if not 1 <= p < q <= n:
        raise ValueError(f"need 1 <= p < q <= {n}, got p={p}, q={q}")
    vi, vk = Fraction(arrangement[p - 1]), Fraction(arrangement[q - 1])
    if vi == vk:
        raise DegeneratePairError(f"F_{p}{p} = F_{q}{q} = {vi}: the sphere collapses to a point")
    return vi, vk


def conjugating_unitary(n: int, p: int, q: int, z: ZValue) -> np.ndarray:
    """I_z = (1/Z)[[1, -z̄], [z, 1]] on coordinates p, q, with Z = √(1+|z|²)."""
    u = np.eye(n, dtype=complex)
    i, k = p - 1, q - 1
    if _is_infinite(z):
        u[i, i] = u[k, k] = 0.0
        u[i, k] = -1.0
        u[k, i] = 1.0
        return u
    re, im = _z_parts(z)
    z = complex(float(re), float(im))
    scale = 1.0 / math.sqrt(1.0 + abs(z) ** 2)
    u[i, i] = u[k, k] = scale
    u[i, k] = -z.conjugate() * scale
    u[k, i] = z * scale
    return u


def sphere_point(arrangement: Sequence, p: int, q: int, z: ZValue) -> SpherePoint:
    """
    Build F_z for the pair (p, q). Rational z (or an (re, im) pair of rationals) is exact; float z is read as its binary value.

    The p,q block is [[(v_i + m v_k), z̄(v_i - v_k)], [z(v_i - v_k), (v_k + m v_i)]] / (1 + m)
    with m = |z|². z = ∞ gives the swapped arrangement.
    """
    arrangement = tuple(Fraction(v) for v in arrangement)
    vi, vk = _check_pair(arrangement, p, q)
    i, k = p - 1, q - 1
    entries = np.diag([float(v) for v in arrangement]).astype(complex)

    if _is_infinite(z):
        entries[i, i], entries[k, k] = float(vk), float(vi)
        return SpherePoint(arrangement, p, q, z, HermitianMatrix(entries), vk, vi + vk, vi * vk)

    re, im = _z_parts(z)
    m = re * re + im * im
    pp = (vi + m * vk) / (1 + m)
    qq = (vk + m * vi) / (1 + m)
    off_re = re * (vi - vk) / (1 + m)
    off_im = im * (vi - vk) / (1 + m)

    entries[i, i], entries[k, k] = float(pp), float(qq)
    entries[k, i] = complex(float(off_re), float(off_im))
    entries[i, k] = complex(float(off_re), -float(off_im))
    determinant = pp * qq - (off_re * off_re + off_im * off_im)
    return SpherePoint(arrangement, p, q, z, HermitianMatrix(entries), pp, pp + qq, determinant)


def _adjacent_value(spectrum: Spectrum, vi: Fraction, vk: Fraction) -> Fraction:
    """Distinct eigenvalue next to v_i on the way to v_k."""
    if vi > vk:
        return max(v for v in spectrum.distinct_values if v < vi)
    return min(v for v in spectrum.distinct_values if v > vi)


def edge_pattern_at(arrangement: Sequence, p: int, q: int, rho: Fraction) -> GTPattern:
    """V_F + |v_i - ρ|·δ_(p,q), the exact point of the edge at parameter ρ."""
    arrangement = tuple(Fraction(v) for v in arrangement)
    vi, _ = _check_pair(arrangement, p, q)
    spec = orbit_spec(Spectrum(tuple(sorted(arrangement, reverse=True))))
    direction = next(e.direction for e in edge_directions_at_good_vertex(arrangement, spec) if e.pair == (p, q))
    base = gt_of_diagonal(arrangement)
    t = abs(vi - Fraction(rho))
    return GTPattern.from_vector(base.top, tuple(x + t * d for x, d in zip(base.to_vector(), direction)))


def trace_edge(
    arrangement: Sequence,
    p: int,
    q: int,
    samples: int,
    tol: Optional[float] = None,
) -> List[Tuple[Fraction, GTPattern]]:
    """Λ(F_z) for ρ evenly spaced from v_i to the adjacent distinct value toward v_k."""
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    arrangement = tuple(Fraction(v) for v in arrangement)
    vi, vk = _check_pair(arrangement, p, q)
    spectrum = Spectrum(tuple(sorted(arrangement, reverse=True)))
    if not is_good_arrangement(arrangement, orbit_spec(spectrum)):
        raise PreconditionError("trace_edge needs a good vertex arrangement")
    tol = Config.TOLERANCE if tol is None else tol

    target = _adjacent_value(spectrum, vi, vk)
    steps = max(samples - 1, 1)
    result = []
    for s in range(samples):
        rho = vi + (target - vi) * Fraction(s, steps)
        if rho == vk:
            z = math.inf
        else:
            z = math.sqrt(float((vi - rho) / (rho - vk)))
        point = sphere_point(arrangement, p, q, z)
        result.append((rho, gt_map(point.matrix, tol)))
    logger.debug("traced pair (%d,%d) with %d samples", p, q, samples)
    return result
