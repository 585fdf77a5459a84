"""Brute-force vertex and edge enumeration for small GT polytopes.

Used to cross-check the combinatorial edge construction; exponential in N,
so limited to n ≤ Config.ORACLE_MAX_N.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, List, Sequence, Tuple

import sympy as sp

from .config import Config
from .errors import PreconditionError
from .gtpolytope import GTPolytope, Vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleEdge:
    vertex: Vector
    neighbor: Vector
    direction: Tuple[int, ...]
    length: Fraction


def _require_small(polytope: GTPolytope) -> None:
    if polytope.spectrum.n > Config.ORACLE_MAX_N:
        logger.warning("vertex oracle capped at n=%d; refusing n=%d", Config.ORACLE_MAX_N, polytope.spectrum.n)
        raise ValueError(
            f"vertex oracle is limited to n <= {Config.ORACLE_MAX_N}, got n={polytope.spectrum.n}"
        )


def _rational(value: Fraction) -> sp.Rational:
    return sp.Rational(value.numerator, value.denominator)


def tight_set(polytope: GTPolytope, x: Sequence) -> FrozenSet[int]:
    """Indices of the inequalities holding with equality at x."""
    return frozenset(i for i, ineq in enumerate(polytope.inequalities) if ineq.slack(x) == 0)


def _rank(polytope: GTPolytope, indices) -> int:
    rows = [list(polytope.inequalities[i].normal) for i in sorted(indices)]
    return sp.Matrix(rows).rank() if rows else 0


def enumerate_vertices(polytope: GTPolytope) -> Tuple[Vector, ...]:
    """Every vertex, found by solving each nonsingular N-subset of inequalities exactly."""
    _require_small(polytope)
    return _enumerate_vertices(polytope)


@lru_cache(maxsize=32)
def _enumerate_vertices(polytope: GTPolytope) -> Tuple[Vector, ...]:
    size = polytope.N
    if size == 0:
        return ((),)

    found = set()
    for subset in combinations(polytope.inequalities, size):
        m = sp.Matrix([list(ineq.normal) for ineq in subset])
        if m.det() == 0:
            continue
        rhs = sp.Matrix([_rational(ineq.rhs) for ineq in subset])
        solution = m.LUsolve(rhs)
        x = tuple(Fraction(int(v.p), int(v.q)) for v in solution)
        if all(ineq.slack(x) >= 0 for ineq in polytope.inequalities):
            found.add(x)

    logger.debug("λ=(%s): oracle found %d vertices", polytope.spectrum, len(found))
    return tuple(sorted(found))


def primitive_direction(difference: Sequence[Fraction]) -> Tuple[Tuple[int, ...], Fraction]:
    """Split a nonzero rational vector into (primitive integer direction, length)."""
    difference = [Fraction(d) for d in difference]
    if not any(difference):
        raise ValueError("difference must be nonzero")
    scale = math.lcm(*(d.denominator for d in difference))
    integral = [int(d * scale) for d in difference]
    g = math.gcd(*integral)
    return tuple(v // g for v in integral), Fraction(g, scale)


def oracle_edges(polytope: GTPolytope, vertex: Sequence) -> List[OracleEdge]:
    """Edges at `vertex`: neighbors sharing N-1 independent tight inequalities."""
    vertex = tuple(Fraction(v) for v in vertex)
    vertices = enumerate_vertices(polytope)
    if vertex not in vertices:
        raise PreconditionError(f"{tuple(str(v) for v in vertex)} is not a vertex of the polytope")

    here = tight_set(polytope, vertex)
    edges = []
    for other in vertices:
        if other == vertex:
            continue
        if _rank(polytope, here & tight_set(polytope, other)) != polytope.N - 1:
            continue
        direction, length = primitive_direction([b - a for a, b in zip(vertex, other)])
        edges.append(OracleEdge(vertex, other, direction, length))
    return edges
