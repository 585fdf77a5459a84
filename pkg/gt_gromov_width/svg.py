"""Minimal SVG drawing of the moment polytope Q and its 1-skeleton for n = 3."""

import math
from html import escape
from typing import List, Sequence, Tuple

from .errors import UnsupportedSpectrumError
from .skeleton import SkeletonGraph

SVG_HEADER = """<?xml version="1.0" standalone="no"?>
<svg width="{width}" height="{height}" version="1.1" xmlns="http://www.w3.org/2000/svg">
"""

SVG_FOOTER = """</svg>
"""

Point = Tuple[float, float]


class SvgCanvas:
    """Accumulates SVG elements in window coordinates (y grows downward)."""

    def __init__(self, width: int = 420, height: int = 420):
        self.width = width
        self.height = height
        self.elements: List[str] = []

    def polygon(self, points: Sequence[Point], fill: str = "#e8eef7", stroke: str = "none") -> None:
        coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in points)
        self.elements.append(f'  <polygon points="{coords}" style="fill:{fill};stroke:{stroke}"/>\n')

    def line(self, x1: float, y1: float, x2: float, y2: float, color: str = "grey", width: float = 1) -> None:
        self.elements.append(
            f'  <line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"'
            f' style="stroke:{color};stroke-width:{width}"/>\n'
        )

    def dot(self, x: float, y: float, color: str = "red", radius: float = 4) -> None:
        self.elements.append(
            f'  <circle cx="{x:.3f}" cy="{y:.3f}" r="{radius}" style="stroke:black;stroke-width:1;fill:{color}"/>\n'
        )

    def text(self, string: str, x: float, y: float) -> None:
        self.elements.append(
            f'  <text x="{x:.3f}" y="{y:.3f}" style="font-family:Verdana;font-size:11">{escape(string)}</text>\n'
        )

    def render(self) -> str:
        return SVG_HEADER.format(width=self.width, height=self.height) + "".join(self.elements) + SVG_FOOTER


def project_to_plane(x: Sequence) -> Point:
    """Orthonormal coordinates on the plane Σx_i = const."""
    a, b, c = (float(v) for v in x)
    return (a - b) / math.sqrt(2.0), (a + b - 2.0 * c) / math.sqrt(6.0)


def render_moment_polytope(graph: SkeletonGraph, size: int = 420, margin: int = 50) -> str:
    """Q as a filled polygon with the skeleton edges and labelled vertices on top."""
    if graph.spectrum.n != 3:
        raise UnsupportedSpectrumError(f"plotting needs n = 3, got n = {graph.spectrum.n}")

    plane = [project_to_plane(v) for v in graph.vertices]
    cx = sum(x for x, _ in plane) / len(plane)
    cy = sum(y for _, y in plane) / len(plane)
    extent = max((max(abs(x - cx), abs(y - cy)) for x, y in plane), default=0.0) or 1.0
    scale = (size / 2 - margin) / extent

    def window(point: Point) -> Point:
        x, y = point
        return size / 2 + scale * (x - cx), size / 2 - scale * (y - cy)

    canvas = SvgCanvas(size, size)
    if len(plane) >= 3:
        hull = sorted(plane, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
        canvas.polygon([window(p) for p in hull])
    for edge in graph.edges:
        (x1, y1), (x2, y2) = window(plane[edge.u]), window(plane[edge.v])
        canvas.line(x1, y1, x2, y2, color="#3a5f9f", width=1.5)
    for vertex, point in zip(graph.vertices, plane):
        x, y = window(point)
        canvas.dot(x, y)
        canvas.text("(" + ",".join(str(v) for v in vertex) + ")", x + 6, y - 6)
    return canvas.render()
