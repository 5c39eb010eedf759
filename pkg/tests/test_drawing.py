import numpy as np
import pytest

from petersen_tsg.diagram import cycle_diagram, linking_number, validate
from petersen_tsg.drawing import DegenerateProjection, PolylineEdge, diagram_from_polylines, view_frame
from petersen_tsg.knots import identify_diagram
from petersen_tsg.reconstruct import BUILDERS


def test_view_frame_is_a_rotation():
    m = view_frame((0.31, 0.47, 0.83))
    assert np.allclose(m @ m.T, np.eye(3))
    assert np.isclose(np.linalg.det(m), 1)
    d = np.array([0.31, 0.47, 0.83])
    assert np.allclose(m @ (d / np.linalg.norm(d)), (0, 0, 1))


def test_flat_square_has_no_crossings():
    verts = {"1": (0, 0, 0), "2": (1, 0, 0), "3": (1, 1, 0), "4": (0, 1, 0)}
    edges = [
        PolylineEdge(f"{u}{v}", u, v, (verts[u], verts[v]))
        for u, v in (("1", "2"), ("2", "3"), ("3", "4"), ("1", "4"))
    ]
    d = diagram_from_polylines(verts, edges)
    assert not d.crossings and validate(d) == []


def test_touching_segments_are_degenerate():
    verts = {"1": (0, 0, 0), "2": (2, 0, 0), "3": (1, 1, 0), "4": (1, -1, 0)}
    edges = [
        PolylineEdge("12", "1", "2", ((0, 0, 0), (2, 0, 0))),
        PolylineEdge("34", "3", "4", ((1, 1, 0), (1, -1, 0))),
        PolylineEdge("13", "1", "3", ((0, 0, 0), (1, 1, 0))),
        PolylineEdge("24", "2", "4", ((2, 0, 0), (1, -1, 0))),
    ]
    with pytest.raises(DegenerateProjection):
        diagram_from_polylines(verts, edges)


@pytest.mark.parametrize("name, count", [("gamma", 5), ("lambda", 3), ("delta", 4)])
def test_reconstruction_crossing_counts(name, count):
    d = BUILDERS[name]()
    assert len(d.crossings) == count
    assert validate(d) == []


def test_gamma_view_change_keeps_knot_types():
    from petersen_tsg.reconstruct import gamma_drawing

    d = diagram_from_polylines(*gamma_drawing(), direction=(0.05, 0.07, 1.0))
    assert str(identify_diagram(cycle_diagram(d, list("abcde")))).startswith("5_1")
    assert str(identify_diagram(cycle_diagram(d, list("12345")))) == "unknot"


def test_delta_view_change_keeps_linking():
    from petersen_tsg.reconstruct import delta_drawing

    d = diagram_from_polylines(*delta_drawing(), direction=(0.2, -0.5, 0.84))
    assert abs(linking_number(d, list("12345"), list("abcde"))) == 1
