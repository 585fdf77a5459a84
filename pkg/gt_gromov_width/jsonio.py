"""JSON documents for spectra, matrices, patterns, reports and skeleton graphs.

Rationals are written as "p/q" strings (plain "p" for integers). Every
`*_to_json` has a matching parser, and `dumps` is canonical: parsing a dumped
document and dumping it again reproduces the same text.
"""

import json
import re
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Union

import numpy as np

from .errors import SpectrumParseError
from .gtpolytope import EdgeRay, EmbeddingReport, GoodVertex
from .gtsystem import GTPattern
from .hermitian import HermitianMatrix, Spectrum
from .skeleton import SkeletonEdge, SkeletonGraph

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


# ---- Scalars ----

def parse_rational(value: Any, allow_float: bool = False) -> Fraction:
    """Read an integer, a "p/q" string or (with allow_float) a decimal."""
    if isinstance(value, bool):
        raise SpectrumParseError(f"not a number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        if not allow_float:
            raise SpectrumParseError(f"floats are not accepted where exact values are required: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        if _RATIONAL.match(value):
            try:
                return Fraction(value.replace(" ", ""))
            except ZeroDivisionError:
                raise SpectrumParseError(f"zero denominator in {value!r}")
        if allow_float:
            try:
                return Fraction(float(value))
            except ValueError:
                pass
        raise SpectrumParseError(f"not a rational number: {value!r}")
    raise SpectrumParseError(f"not a number: {value!r}")


def format_rational(value: Union[Fraction, int]) -> str:
    return str(Fraction(value))


def _number(value) -> Union[str, float]:
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return format_rational(value)
    return float(value)


def parse_spectrum(text: str) -> Spectrum:
    """Spectrum from "5,5,4" (commas and/or whitespace; rationals as p/q)."""
    parts = [part for part in re.split(r"[,\s]+", text.strip()) if part]
    if not parts:
        raise SpectrumParseError("empty spectrum")
    values = [parse_rational(part) for part in parts]
    try:
        return Spectrum(tuple(values))
    except ValueError as e:
        raise SpectrumParseError(str(e)) from e


def _spectrum_from_list(values: Sequence) -> Spectrum:
    try:
        return Spectrum(tuple(parse_rational(v) for v in values))
    except ValueError as e:
        if isinstance(e, SpectrumParseError):
            raise
        raise SpectrumParseError(str(e)) from e


# ---- Documents ----

def loads(text: str) -> Dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpectrumParseError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise SpectrumParseError("expected a JSON object")
    return doc


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _field(doc: Dict[str, Any], name: str):
    if name not in doc:
        raise SpectrumParseError(f"missing field {name!r}")
    return doc[name]


# ---- Matrices ----

def matrix_to_json(a: HermitianMatrix) -> Dict[str, Any]:
    doc = {"n": a.n, "re": a.entries.real.tolist()}
    if np.any(a.entries.imag != 0):
        doc["im"] = a.entries.imag.tolist()
    return doc


def matrix_from_json(doc: Dict[str, Any]) -> HermitianMatrix:
    n = _field(doc, "n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SpectrumParseError(f"n must be a positive integer, got {n!r}")

    def grid(name: str) -> np.ndarray:
        rows = doc[name]
        if not isinstance(rows, list) or len(rows) != n or any(
            not isinstance(row, list) or len(row) != n for row in rows
        ):
            raise SpectrumParseError(f"{name!r} must be an {n}x{n} array")
        return np.array([[float(parse_rational(v, allow_float=True)) for v in row] for row in rows])

    real = grid("re") if "re" in doc else None
    if real is None:
        raise SpectrumParseError("missing field 're'")
    imag = grid("im") if "im" in doc else np.zeros((n, n))
    return HermitianMatrix(real + 1j * imag)


# ---- Patterns ----

def pattern_to_json(pattern: GTPattern) -> Dict[str, Any]:
    return {
        "n": pattern.n,
        "top": [_number(v) for v in pattern.top],
        "rows": [[_number(v) for v in row] for row in pattern.rows],
    }


def pattern_from_json(doc: Dict[str, Any], allow_float: bool = False) -> GTPattern:
    """Parse a pattern; float entries only with allow_float (numeric patterns)."""
    n = _field(doc, "n")
    top = _field(doc, "top")
    rows = _field(doc, "rows")
    if not isinstance(top, list) or not isinstance(rows, list) or len(top) != n:
        raise SpectrumParseError(f"pattern needs a top row of length n={n}")

    def convert(v):
        if allow_float and isinstance(v, float):
            return v
        return parse_rational(v)

    try:
        return GTPattern(
            tuple(convert(v) for v in top),
            tuple(tuple(convert(v) for v in row) for row in rows),
        )
    except ValueError as e:
        if isinstance(e, SpectrumParseError):
            raise
        raise SpectrumParseError(str(e)) from e


# ---- Reports ----

def report_to_json(report: EmbeddingReport) -> Dict[str, Any]:
    return {
        "lambda": [format_rational(v) for v in report.spectrum.values],
        "N": report.N,
        "D": report.D,
        "orbit_dimension": report.orbit_dimension,
        "good_vertex": {
            "arrangement": [format_rational(v) for v in report.good_vertex.arrangement],
            "pattern": pattern_to_json(report.good_vertex.pattern),
        },
        "edges": [
            {
                "pair": list(edge.pair),
                "direction": list(edge.direction),
                "length": format_rational(edge.length),
            }
            for edge in report.edges
        ],
        "gromov_lower_bound": format_rational(report.gromov_lower_bound),
        "min_gap": format_rational(report.min_gap),
        "capacity": report.capacity_statement,
    }


def report_from_json(doc: Dict[str, Any]) -> EmbeddingReport:
    """Rebuild a report; raises TheoremMismatchError if its bound is inconsistent."""
    spectrum = _spectrum_from_list(_field(doc, "lambda"))
    vertex_doc = _field(doc, "good_vertex")
    pattern = pattern_from_json(_field(vertex_doc, "pattern"))
    vertex = GoodVertex(tuple(parse_rational(v) for v in _field(vertex_doc, "arrangement")), pattern)
    edges = tuple(
        EdgeRay(pattern, tuple(_field(e, "pair")), tuple(_field(e, "direction")), parse_rational(_field(e, "length")))
        for e in _field(doc, "edges")
    )
    return EmbeddingReport(
        spectrum=spectrum,
        N=_field(doc, "N"),
        D=_field(doc, "D"),
        orbit_dimension=_field(doc, "orbit_dimension"),
        good_vertex=vertex,
        edges=edges,
        gromov_lower_bound=parse_rational(_field(doc, "gromov_lower_bound")),
        min_gap=parse_rational(_field(doc, "min_gap")),
    )


# ---- Skeleton graphs ----

def skeleton_to_json(graph: SkeletonGraph) -> Dict[str, Any]:
    return {
        "lambda": [format_rational(v) for v in graph.spectrum.values],
        "vertices": [[format_rational(v) for v in vertex] for vertex in graph.vertices],
        "edges": [
            {
                "u": e.u,
                "v": e.v,
                "pair": list(e.pair),
                "weight": list(e.weight),
                "length": format_rational(e.length),
            }
            for e in graph.edges
        ],
    }


def skeleton_from_json(doc: Dict[str, Any]) -> SkeletonGraph:
    spectrum = _spectrum_from_list(_field(doc, "lambda"))
    vertices = tuple(tuple(parse_rational(v) for v in vertex) for vertex in _field(doc, "vertices"))
    edges: List[SkeletonEdge] = [
        SkeletonEdge(
            _field(e, "u"),
            _field(e, "v"),
            tuple(_field(e, "pair")),
            tuple(_field(e, "weight")),
            parse_rational(_field(e, "length")),
        )
        for e in _field(doc, "edges")
    ]
    return SkeletonGraph(spectrum, vertices, tuple(edges))
