import math

import pytest

from gt_gromov_width.errors import UnsupportedSpectrumError
from gt_gromov_width.hermitian import Spectrum
from gt_gromov_width.skeleton import skeleton_graph
from gt_gromov_width.svg import SvgCanvas, project_to_plane, render_moment_polytope


def test_hexagon_with_diagonals():
    svg = render_moment_polytope(skeleton_graph(Spectrum((3, 2, 1))))
    assert svg.count("<line") == 9
    assert svg.count("<circle") == 6
    assert svg.count("<polygon") == 1
    assert svg.rstrip().endswith("</svg>")


def test_triangle():
    svg = render_moment_polytope(skeleton_graph(Spectrum((5, 5, 4))))
    assert svg.count("<line") == 3
    assert svg.count("<circle") == 3
    assert "(5,4,5)" in svg


def test_point_orbit_draws_one_dot():
    svg = render_moment_polytope(skeleton_graph(Spectrum((2, 2, 2))))
    assert svg.count("<circle") == 1
    assert "<polygon" not in svg


@pytest.mark.parametrize("values", [(3, 1), (4, 3, 2, 1)])
def test_other_sizes_unsupported(values):
    with pytest.raises(UnsupportedSpectrumError):
        render_moment_polytope(skeleton_graph(Spectrum(values)))


def test_projection_is_isometric_on_the_plane():
    a, b = project_to_plane((3, 2, 1)), project_to_plane((2, 3, 1))
    assert math.dist(a, b) == pytest.approx(math.sqrt(2))


def test_canvas_escapes_text():
    canvas = SvgCanvas(10, 10)
    canvas.text("a<b", 1, 2)
    assert "a&lt;b" in canvas.render()
