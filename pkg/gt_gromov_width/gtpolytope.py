"""Exact polyhedral computations on the Gelfand-Tsetlin polytope.

All arithmetic here is `Fraction`; no floating point enters this module.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy as sp
from sympy.utilities.iterables import multiset_permutations

from .errors import PreconditionError, TheoremMismatchError, UnsupportedSpectrumError
from .gtsystem import (
    GTPattern,
    OrbitSpec,
    Position,
    coordinate_count,
    coordinate_index,
    gt_of_diagonal,
    midpoint_pattern,
    orbit_spec,
    positions,
    project_to_diagonal,
)
from .hermitian import Spectrum

logger = logging.getLogger(__name__)

VERTEX = "vertex"
EDGE_INTERIOR = "edge_interior"
OTHER = "other"

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Inequality:
    """normal·x ≤ rhs, labelled A_{j,k} or B_{j,k}."""

    label: Tuple[str, int, int]
    normal: Tuple[int, ...]
    rhs: Fraction

    def lhs(self, x: Sequence) -> Fraction:
        return sum((c * xi for c, xi in zip(self.normal, x) if c), Fraction(0))

    def slack(self, x: Sequence) -> Fraction:
        return self.rhs - self.lhs(x)

    @property
    def name(self) -> str:
        kind, j, k = self.label
        return f"{kind}_{{{j},{k}}}"


@dataclass(frozen=True)
class GTPolytope:
    """H-representation of the GT polytope: A_{j,k} and B_{j,k} per coordinate."""

    spectrum: Spectrum
    inequalities: Tuple[Inequality, ...]

    @property
    def N(self) -> int:
        return coordinate_count(self.spectrum.n)

    def pair(self, j: int, k: int) -> Tuple[Inequality, Inequality]:
        """(A_{j,k}, B_{j,k})."""
        i = positions(self.spectrum.n).index((j, k))
        return self.inequalities[2 * i], self.inequalities[2 * i + 1]


@dataclass(frozen=True)
class PointClass:
    kind: str
    free_positions: Tuple[Position, ...]


@dataclass(frozen=True)
class FaceCertificate:
    """Sum C·x ≤ Z of tight inequalities whose equality set is the face."""

    labels: Tuple[Tuple[str, int, int], ...]
    normal: Tuple[int, ...]
    rhs: Fraction


@dataclass(frozen=True)
class GoodVertex:
    arrangement: Vector
    pattern: GTPattern


@dataclass(frozen=True)
class EdgeDirection:
    pair: Tuple[int, int]
    direction: Tuple[int, ...]


@dataclass(frozen=True)
class EdgeRay:
    """Edge base + t·direction, 0 ≤ t ≤ length, of the polytope at a good vertex."""

    base: GTPattern
    pair: Tuple[int, int]
    direction: Tuple[int, ...]
    length: Fraction

    @property
    def endpoint(self) -> GTPattern:
        vector = tuple(x + self.length * d for x, d in zip(self.base.to_vector(), self.direction))
        return GTPattern.from_vector(self.base.top, vector)

    @property
    def pr_shift(self) -> List[Fraction]:
        """pr(endpoint) - pr(base); a multiple of -e_p + e_q."""
        start = project_to_diagonal(self.base)
        end = project_to_diagonal(self.endpoint)
        return [b - a for a, b in zip(start, end)]


@dataclass(frozen=True)
class EmbeddingReport:
    """Edge data at a good vertex and the resulting ball-embedding bound."""

    spectrum: Spectrum
    N: int
    D: int
    orbit_dimension: int
    good_vertex: GoodVertex
    edges: Tuple[EdgeRay, ...]
    gromov_lower_bound: Fraction
    min_gap: Fraction = field(default=None)

    def __post_init__(self):
        gap = self.spectrum.min_gap()
        if self.min_gap is None:
            object.__setattr__(self, "min_gap", gap)
        if self.gromov_lower_bound != self.min_gap or self.min_gap != gap:
            raise TheoremMismatchError(
                f"edge-length bound {self.gromov_lower_bound} differs from min gap {gap} for λ=({self.spectrum})"
            )

    @property
    def capacity_statement(self) -> str:
        return (
            f"a ball B_r = {{z in C^{self.D} : pi*sum|z_j|^2 < r}} of capacity r = {self.gromov_lower_bound} "
            f"embeds symplectically into the orbit of dimension {self.orbit_dimension}"
        )


# ---- H-representation and membership ----

def hrep(spectrum: Spectrum) -> GTPolytope:
    """The 2N inequalities A_{j,k}, B_{j,k}; row n references become constants λ_k."""
    n = spectrum.n
    size = coordinate_count(n)
    lam = spectrum.values
    inequalities = []
    for j, k in positions(n):
        i = coordinate_index(n, j, k)

        # A_{j,k}: x^{(j)}_k ≤ x^{(j+1)}_k
        normal = [0] * size
        normal[i] = 1
        if j + 1 < n:
            normal[coordinate_index(n, j + 1, k)] = -1
            rhs = Fraction(0)
        else:
            rhs = lam[k - 1]
        inequalities.append(Inequality(("A", j, k), tuple(normal), rhs))

        # B_{j,k}: x^{(j+1)}_{k+1} ≤ x^{(j)}_k
        normal = [0] * size
        normal[i] = -1
        if j + 1 < n:
            normal[coordinate_index(n, j + 1, k + 1)] = 1
            rhs = Fraction(0)
        else:
            rhs = -lam[k]
        inequalities.append(Inequality(("B", j, k), tuple(normal), rhs))

    return GTPolytope(spectrum, tuple(inequalities))


def _as_vector(polytope: GTPolytope, x: Sequence) -> Sequence:
    if isinstance(x, GTPattern):
        x = x.to_vector()
    if len(x) != polytope.N:
        raise ValueError(f"expected a point of dimension {polytope.N}, got {len(x)}")
    return x


def contains(polytope: GTPolytope, x: Sequence, tol: float = 0) -> bool:
    """True iff every inequality holds within `tol` (exact for tol=0 and rational x)."""
    x = _as_vector(polytope, x)
    return all(ineq.slack(x) >= -tol for ineq in polytope.inequalities)


def _require_member(polytope: GTPolytope, x: Sequence) -> Vector:
    x = tuple(Fraction(v) for v in _as_vector(polytope, x))
    if not contains(polytope, x, 0):
        raise PreconditionError(f"point {tuple(str(v) for v in x)} lies outside the polytope")
    return x


def classify_point(polytope: GTPolytope, x: Sequence) -> PointClass:
    """Vertex / edge-interior by the sufficient tight-inequality conditions.

    `other` makes no claim about the face containing x.
    """
    x = _require_member(polytope, x)
    free = []
    for j, k in positions(polytope.spectrum.n):
        ineq_a, ineq_b = polytope.pair(j, k)
        if ineq_a.slack(x) > 0 and ineq_b.slack(x) > 0:
            free.append((j, k))
    if not free:
        kind = VERTEX
    elif len(free) == 1:
        kind = EDGE_INTERIOR
    else:
        kind = OTHER
    return PointClass(kind, tuple(free))


def face_certificate(polytope: GTPolytope, x: Sequence) -> FaceCertificate:
    """
    Summed inequality C·x ≤ Z that is tight exactly on the face through x.

    For every non-free position one tight inequality is chosen, B when both
    are tight.

    Args:
        polytope: the GT polytope
        x: a point classified as vertex or edge_interior

    Returns:
        FaceCertificate with the chosen labels, C and Z
    """
    point_class = classify_point(polytope, x)
    if point_class.kind == OTHER:
        raise PreconditionError("no face certificate: more than one free position")
    x = tuple(Fraction(v) for v in _as_vector(polytope, x))

    labels = []
    normal = [0] * polytope.N
    rhs = Fraction(0)
    for j, k in positions(polytope.spectrum.n):
        if (j, k) in point_class.free_positions:
            continue
        ineq_a, ineq_b = polytope.pair(j, k)
        chosen = ineq_b if ineq_b.slack(x) == 0 else ineq_a
        labels.append(chosen.label)
        normal = [c + d for c, d in zip(normal, chosen.normal)]
        rhs += chosen.rhs
    return FaceCertificate(tuple(labels), tuple(normal), rhs)


def affine_dimension(polytope: GTPolytope) -> int:
    """N minus the rank of the inequalities tight on all of the polytope."""
    if polytope.N == 0:
        return 0
    interior = midpoint_pattern(polytope.spectrum).to_vector()
    tight = [list(ineq.normal) for ineq in polytope.inequalities if ineq.slack(interior) == 0]
    rank = sp.Matrix(tight).rank() if tight else 0
    return polytope.N - rank


def wall_is_special(spectrum: Spectrum, j: int, k: int) -> bool:
    """True iff λ^{(j)}_k = λ^{(j)}_{k+1} holds on the whole polytope."""
    if not (1 <= j <= spectrum.n - 1 and 1 <= k <= j - 1):
        raise ValueError(f"no wall ({j},{k}) for n={spectrum.n}")
    forced = orbit_spec(spectrum).forced_map
    value = forced.get((j, k))
    return value is not None and forced.get((j, k + 1)) == value


# ---- Fixed points and good vertices ----

def enumerate_fixed_points(spectrum: Spectrum) -> List[Vector]:
    """Distinct permutations of λ in lexicographic order; n!/(l_1!...l_s!) of them."""
    ascending = sorted(spectrum.distinct_values)
    index = {value: i for i, value in enumerate(ascending)}
    codes = sorted(index[v] for v in spectrum.values)
    return [tuple(ascending[c] for c in perm) for perm in multiset_permutations(codes)]


def _require_supported(spectrum: Spectrum) -> None:
    if spectrum.repeated_value_count >= 2:
        raise UnsupportedSpectrumError(
            f"λ=({spectrum}) has {spectrum.repeated_value_count} repeated eigenvalues; "
            "only orbits with at most one repeated eigenvalue are supported"
        )


def good_vertex(spectrum: Spectrum) -> GoodVertex:
    """Fixed point diag(v_1 > ... > v_m, λ_rep·Id) and its GT pattern.

    The leading block holds every distinct value once, the repeated one
    included, so (5,4,4,4,3,1) gives (5,4,3,1,4,4).
    """
    _require_supported(spectrum)
    arrangement = list(spectrum.distinct_values)
    for value, multiplicity in zip(spectrum.distinct_values, spectrum.multiplicities):
        arrangement.extend([value] * (multiplicity - 1))
    arrangement = tuple(arrangement)
    return GoodVertex(arrangement, gt_of_diagonal(arrangement))


def is_good_arrangement(arrangement: Sequence, spec: OrbitSpec) -> bool:
    """Λ(F) lies on no wall other than the special ones."""
    arrangement = tuple(Fraction(v) for v in arrangement)
    if tuple(sorted(arrangement, reverse=True)) != spec.spectrum.values:
        return False
    pattern = gt_of_diagonal(arrangement)
    for j in range(2, spec.spectrum.n):
        row = pattern.row(j)
        for k in range(1, j):
            if row[k - 1] == row[k] and not wall_is_special(spec.spectrum, j, k):
                return False
    return True


def edge_directions_at_good_vertex(arrangement: Sequence, spec: OrbitSpec) -> List[EdgeDirection]:
    """
    One primitive direction per pair p < q with F_pp ≠ F_qq.

    The value F_pp moves in rows p..q-1: down (-1, last occurrence) when
    F_pp > F_qq, up (+1, first occurrence) otherwise.
    """
    if not is_good_arrangement(arrangement, spec):
        raise PreconditionError(f"arrangement {tuple(str(v) for v in arrangement)} is not a good vertex")
    arrangement = tuple(Fraction(v) for v in arrangement)
    n = len(arrangement)
    pattern = gt_of_diagonal(arrangement)

    directions = []
    for p in range(1, n):
        for q in range(p + 1, n + 1):
            moving, other = arrangement[p - 1], arrangement[q - 1]
            if moving == other:
                continue
            sign = -1 if moving > other else 1
            delta = [0] * spec.N
            for j in range(p, q):
                hits = [k for k, value in enumerate(pattern.row(j), start=1) if value == moving]
                s = hits[-1] if sign < 0 else hits[0]
                delta[coordinate_index(n, j, s)] = sign
            directions.append(EdgeDirection((p, q), tuple(delta)))
    return directions


def ray_shoot(polytope: GTPolytope, base: Sequence, direction: Sequence[int]) -> Optional[Fraction]:
    """Largest c with base + c·direction in the polytope; None if unbounded."""
    base = _require_member(polytope, base)
    if len(direction) != polytope.N:
        raise ValueError(f"direction must have dimension {polytope.N}")
    if not any(direction):
        raise ValueError("direction must be nonzero")

    best = None
    for ineq in polytope.inequalities:
        rate = sum(c * d for c, d in zip(ineq.normal, direction))
        if rate > 0:
            c = ineq.slack(base) / rate
            if best is None or c < best:
                best = c
    return best


# ---- Edge lengths and the capacity bound ----

def edge_rays(spectrum: Spectrum) -> Tuple[GoodVertex, List[EdgeRay]]:
    """The D edges of the polytope at the good vertex, with exact lengths."""
    vertex = good_vertex(spectrum)
    spec = orbit_spec(spectrum)
    polytope = hrep(spectrum)
    base = vertex.pattern.to_vector()

    rays = []
    for edge in edge_directions_at_good_vertex(vertex.arrangement, spec):
        length = ray_shoot(polytope, base, edge.direction)
        if length is None:
            raise TheoremMismatchError(f"edge for pair {edge.pair} is unbounded")
        rays.append(EdgeRay(vertex.pattern, edge.pair, edge.direction, length))
    logger.debug("λ=(%s): %d edge rays at good vertex", spectrum, len(rays))
    return vertex, rays


def gromov_lower_bound(spectrum: Spectrum) -> Tuple[Fraction, EmbeddingReport]:
    """Minimal edge length at the good vertex, with the full report."""
    _require_supported(spectrum)
    spec = orbit_spec(spectrum)
    vertex, rays = edge_rays(spectrum)
    bound = min((ray.length for ray in rays), default=Fraction(0))
    report = EmbeddingReport(
        spectrum=spectrum,
        N=spec.N,
        D=spec.D,
        orbit_dimension=spec.orbit_dimension,
        good_vertex=vertex,
        edges=tuple(rays),
        gromov_lower_bound=bound,
    )
    return bound, report
