"""Service layer for gt_gromov_width."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from .config import Config
from .database.models import DatabaseManager, VerificationRun
from .errors import UnsupportedSpectrumError
from .gtpolytope import (
    VERTEX,
    EmbeddingReport,
    affine_dimension,
    classify_point,
    contains,
    edge_rays,
    enumerate_fixed_points,
    gromov_lower_bound,
    hrep,
)
from .gtsystem import GTPattern, gt_map, gt_of_diagonal, orbit_spec, project_to_diagonal, random_spectrum, sample_pattern
from .hermitian import HermitianMatrix, Spectrum, orbit_matrix, random_unitary
from .polytope_oracle import enumerate_vertices, oracle_edges
from .reconstruct import reconstruct_matrix, solve_arrow, verify_arrow
from .skeleton import SkeletonGraph, edge_pattern_at, skeleton_graph, sphere_point, trace_edge
from .svg import render_moment_polytope

logger = logging.getLogger(__name__)

# Entrywise agreement required of numerically realized patterns.
ROUNDTRIP_TOL = 1e-8


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    trials: int
    message: str


class OrbitService:
    """Single-orbit computations behind the CLI."""

    def __init__(self, tol: Optional[float] = None):
        self.tol = Config.TOLERANCE if tol is None else tol

    def analyze(self, spectrum: Spectrum) -> EmbeddingReport:
        _, report = gromov_lower_bound(spectrum)
        logger.info("λ=(%s): D=%d, bound %s", spectrum, report.D, report.gromov_lower_bound)
        return report

    def pattern(self, matrix: HermitianMatrix) -> GTPattern:
        return gt_map(matrix, self.tol)

    def reconstruct(self, pattern: GTPattern) -> HermitianMatrix:
        return reconstruct_matrix(pattern, self.tol)

    def skeleton(self, spectrum: Spectrum) -> SkeletonGraph:
        return skeleton_graph(spectrum)

    def plot(self, spectrum: Spectrum) -> str:
        return render_moment_polytope(skeleton_graph(spectrum))


class VerificationService:
    """Seeded property suites over one orbit, optionally written to the run log."""

    def __init__(
        self,
        tol: Optional[float] = None,
        trials: Optional[int] = None,
        seed: Optional[int] = None,
        db: Optional[DatabaseManager] = None,
    ):
        """
        Initialize verification service.

        Args:
            tol: eigensolver tolerance
            trials: random cases per randomized suite
            seed: RNG seed; each suite reseeds from it
            db: run log to record results in, or None
        """
        self.tol = Config.TOLERANCE if tol is None else tol
        self.trials = Config.DEFAULT_TRIALS if trials is None else trials
        self.seed = Config.DEFAULT_SEED if seed is None else seed
        self.db = db

    @property
    def suites(self) -> Dict[str, Callable[[Spectrum, np.random.Generator], Tuple[bool, int, str]]]:
        return {
            "theorem_main": self.check_theorem_main,
            "edge_count": self.check_edge_count,
            "edge_lengths": self.check_edge_lengths,
            "fixed_point_vertices": self.check_fixed_point_vertices,
            "oracle": self.check_oracle,
            "dimension": self.check_dimension,
            "pr_consistency": self.check_pr_consistency,
            "gt_image": self.check_gt_image,
            "roundtrip": self.check_roundtrip,
            "sphere": self.check_sphere,
        }

    def run(self, spectrum: Spectrum, names: Optional[Sequence[str]] = None) -> List[SuiteResult]:
        """Run the named suites (all by default) in a fixed order."""
        if spectrum.repeated_value_count >= 2:
            raise UnsupportedSpectrumError(
                f"λ=({spectrum}) has {spectrum.repeated_value_count} repeated eigenvalues"
            )
        selected = list(self.suites) if not names else list(names)
        unknown = [name for name in selected if name not in self.suites]
        if unknown:
            raise ValueError(f"unknown suite(s): {', '.join(unknown)}")

        results = []
        for name in selected:
            rng = np.random.default_rng(self.seed)
            try:
                passed, cases, message = self.suites[name](spectrum, rng)
            except Exception as e:
                logger.exception("suite %s raised", name)
                passed, cases, message = False, 0, f"{type(e).__name__}: {e}"
            result = SuiteResult(name, passed, cases, message)
            results.append(result)
            if self.db is not None:
                self.db.log_verification_run(
                    VerificationRun(str(spectrum), name, cases, self.seed, passed, message)
                )
        return results

    def _pattern_tol(self, spectrum: Spectrum) -> float:
        scale = 1.0 + float(sum(v * v for v in spectrum.values)) ** 0.5
        return max(ROUNDTRIP_TOL, 2.0 * self.tol * scale)

    # ==================== Exact suites ====================

    def check_theorem_main(self, spectrum: Spectrum, rng: np.random.Generator) -> Tuple[bool, int, str]:
        """Edge-length bound equals the min gap, on λ and on random spectra with n ≤ 6."""
        cases = [spectrum] + [random_spectrum(rng, int(rng.integers(2, 7))) for _ in range(self.trials)]
        for case in cases:
            bound, _ = gromov_lower_bound(case)
            if bound != case.min_gap():
                return False, len(cases), f"λ=({case}): bound {bound} != min gap {case.min_gap()}"
        return True, len(cases), f"bound = min gap on {len(cases)} spectra"

    def check_edge_count(self, spectrum: Spectrum, rng: np.random.Generator) -> Tuple[bool, int, str]:
        d = orbit_spec(spectrum).D
        _, rays = edge_rays(spectrum)
        if len(rays) != d:
            return False, 1, f"{len(rays)} edges at the good vertex, expected D={d}"
        if any(ray.length <= 0 for ray in rays):
            return False, 1, "an edge has non-positive length"
        return True, 1, f"{d} edges, all of positive length"

    def check_edge_lengths(self, spectrum: Spectrum, rng: np.random.Generator) -> Tuple[bool, int, str]:
        gap = spectrum.min_gap()
        _, rays = edge_rays(spectrum)
        if not rays:
            return True, 0, "point orbit: no edges"
        short = [ray.pair for ray in rays if ray.length < gap]
        if short:
            return False, len(rays), f"edges {short} shorter than min gap {gap}"
        if not any(ray.length == gap for ray in rays):
            return False, len(rays), f"no edge attains the min gap {gap}"
        return True, len(rays), f"all lengths >= {gap}, attained"

    def check_fixed_point_vertices(self, spectrum: Spectrum, rng: np.random.Generator) -> Tuple[bool, int, str]:
        polytope = hrep(spectrum)
        points = enumerate_fixed_points(spectrum)
        for arrangement in points:
            if classify_point(polytope, gt_of_diagonal(arrangement)).kind != VERTEX:
                return False, len(points), f"diag{tuple(str(v) for v in arrangement)} is not classified as a vertex"
        return True, len(points), f"{len(points)} fixed points are vertices"

    def check_oracle(self, spectrum: Spectrum, rng: np.random.Generator) -> Tuple[bool, int, str]:
        if spectrum.n > Config.ORACLE_MAX_N:
            logger.warning("oracle suite skipped for λ=(%s): n=%d exceeds the cap %d", spectrum, spectrum.n, Config.ORACLE_MAX_N)
            return True, 0, f"skipped: n > {Config.ORACLE_MAX_N}"
        vertex, rays = edge_rays(spectrum)
        polytope = hrep(spectrum)
        combinatorial = {(ray.direction, ray.length) for ray in rays}
        brute = {(e.direction, e.length) for e in oracle_edges(polytope, vertex.pattern.to_vector())}
        if combinatorial != brute:
            return False, len(brute), f"edge sets differ: {len(combinatorial)} combinatorial vs {len(brute)} oracle"
        return True, len(brute), f"{len(brute)} edges match the oracle"

    def check_dimension(self, spectrum: Spectrum, rng: np.random.Generator) -> Tuple[bool, int, str]:
        d = orbit_spec(spectrum).D
        polytope = hrep(spectrum)
        found = affine_dimension(polytope)
        if found != d:
            return False, 1, f"affine dimension {found} != D={d}"
        if spectrum.n <= Config.ORACLE_MAX_N:
            vertices = enumerate_vertices(polytope)
            differences = [[b - a for a, b in zip(vertices[0], v)] for v in vertices[1:]]
            rank = sp.Matrix(differences).rank() if differences and polytope.N else 0
            if rank != d:
                return False, 1, f"vertex span has dimension {rank} != D={d}"
        return True, 1, f"dimension {d}"

    def check_pr_consistency(self, spectrum: Spectrum, rng: np.random.Generator) -> Tuple[bool, int, str]:
        _, rays = edge_rays(spectrum)
        for ray in rays:
            p, q = ray.pair
            sign = 1 if sum(ray.direction) < 0 else -1
            expected = [Fraction(0)] * spectrum.n
            expected[p - 1] = -sign * ray.length
            expected[q - 1] = sign * ray.length
            if ray.pr_shift != expected:
                return False, len(rays), f"pair {ray.pair}: pr shift {ray.pr_shift} != {expected}"
        return True, len(rays), "pr shifts are multiples of -e_p + e_q"

    # ==================== Numerical suites ====================

    def check_gt_image(self, spectrum: Spectrum, rng: np.random.Generator) -> Tuple[bool, int, str]:
        """Λ of random orbit points lies in the polytope and pr recovers the diagonal."""
        polytope = hrep(spectrum)
        tol = self._pattern_tol(spectrum)
        for _ in range(self.trials):
            a = orbit_matrix(spectrum, random_unitary(spectrum.n, rng))
            pattern = gt_map(a, self.tol)
            if not contains(polytope, pattern.to_vector(), tol):
                return False, self.trials, "Λ(A) left the polytope"
            if np.max(np.abs(np.array(project_to_diagonal(pattern)) - a.diag())) > tol:
                return False, self.trials, "pr(Λ(A)) differs from diag(A)"
            if max(abs(float(x) - y) for x, y in zip(spectrum.values, pattern.top)) > tol:
                return False, self.trials, "top row differs from λ"
        return True, self.trials, f"{self.trials} orbit points inside the polytope"

    def check_roundtrip(self, spectrum: Spectrum, rng: np.random.Generator) -> Tuple[bool, int, str]:
        """gt_map ∘ reconstruct_matrix is the identity on sampled patterns; arrow stages are exact."""
        tol = self._pattern_tol(spectrum)
        worst = 0.0
        for _ in range(self.trials):
            pattern = sample_pattern(spectrum, rng)
            for j in range(1, spectrum.n):
                if not verify_arrow(solve_arrow(pattern.row(j), pattern.row(j + 1))):
                    return False, self.trials, f"arrow stage {j} failed its exact check"
            realized = gt_map(reconstruct_matrix(pattern, self.tol), self.tol)
            worst = max(worst, realized.max_abs_difference(pattern))
            if worst > tol:
                return False, self.trials, f"roundtrip error {worst:.3e} exceeds {tol:.1e}"
        return True, self.trials, f"max roundtrip error {worst:.3e}"

    def check_sphere(self, spectrum: Spectrum, rng: np.random.Generator) -> Tuple[bool, int, str]:
        """Exact 2x2 invariants of F_z, and affine edge tracing at the good vertex."""
        points = enumerate_fixed_points(spectrum)
        cases = 0
        if len(points) > 1:
            for _ in range(self.trials):
                arrangement = points[int(rng.integers(0, len(points)))]
                pairs = [
                    (p, q)
                    for p in range(1, spectrum.n)
                    for q in range(p + 1, spectrum.n + 1)
                    if arrangement[p - 1] != arrangement[q - 1]
                ]
                p, q = pairs[int(rng.integers(0, len(pairs)))]
                z = complex(int(rng.integers(-8, 9)) / 4, int(rng.integers(-8, 9)) / 4)
                point = sphere_point(arrangement, p, q, z)
                vi, vk = arrangement[p - 1], arrangement[q - 1]
                cases += 1
                if point.block_trace != vi + vk or point.block_determinant != vi * vk:
                    return False, cases, f"F_z block invariants fail at pair {(p, q)}, z={z}"

        vertex, rays = edge_rays(spectrum)
        tol = self._pattern_tol(spectrum)
        for ray in rays:
            p, q = ray.pair
            vi = vertex.arrangement[p - 1]
            for rho, pattern in trace_edge(vertex.arrangement, p, q, 5, self.tol):
                cases += 1
                expected = edge_pattern_at(vertex.arrangement, p, q, rho)
                if pattern.max_abs_difference(expected) > tol:
                    return False, cases, f"pair {(p, q)} at ρ={rho}: Λ(F_z) is off the edge"
                shift = np.array(project_to_diagonal(pattern)) - np.array([float(v) for v in vertex.arrangement])
                target = np.zeros(spectrum.n)
                target[p - 1], target[q - 1] = -float(vi - rho), float(vi - rho)
                if np.max(np.abs(shift - target)) > tol:
                    return False, cases, f"pair {(p, q)} at ρ={rho}: pr shift is not (v_i-ρ)(-e_p+e_q)"
        return True, cases, f"{cases} sphere checks"
