"""Explicit 3D drawings of the three base embeddings of the Petersen graph.

All three use the same labelling: outer 5-cycle 1-2-3-4-5, inner pentagram
a-b-c-d-e, spokes 1a, 2c, 3e, 4b, 5d.  Edge ids are the concatenated
endpoint names and the stored direction follows that order.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .diagram import SpatialDiagram
from .drawing import PolylineEdge, diagram_from_polylines

EDGE_IDS = ("12", "23", "34", "45", "15", "ab", "bc", "cd", "de", "ae", "1a", "2c", "3e", "4b", "5d")
VERTEX_NAMES = ("1", "2", "3", "4", "5", "a", "b", "c", "d", "e")
SPOKE = {"1": "a", "2": "c", "3": "e", "4": "b", "5": "d"}

_SAMPLES = 25


def _polyline(f, n=_SAMPLES):
    return tuple(tuple(float(c) for c in f(i / n)) for i in range(n + 1))


def _edge(name, f, n=_SAMPLES):
    return PolylineEdge(name, name[0], name[1], _polyline(f, n))


def gamma_drawing():
    """Planar outer pentagon with spokes to an alternating pentagram (a 5_1 inside).

    Rotating by -2pi/5 and turning the picture over are symmetries.
    """
    pos = {}
    for k in range(5):
        ang = math.pi / 2 - 2 * math.pi * k / 5
        pos[str(k + 1)] = (2 * math.cos(ang), 2 * math.sin(ang), 0.0)
        pos[SPOKE[str(k + 1)]] = (math.cos(ang), math.sin(ang), 0.0)

    def straight(u, v):
        p, q = np.array(pos[u]), np.array(pos[v])
        return lambda s: p + s * (q - p)

    def chord(u, v, forward):
        p, q = np.array(pos[u]), np.array(pos[v])
        sgn = 1.0 if forward else -1.0
        return lambda s: p + s * (q - p) + np.array([0, 0, 0.5 * sgn * math.sin(2 * math.pi * s)])

    edges = []
    for name in EDGE_IDS:
        u, v = name
        if u.isalpha() and v.isalpha():
            # inner cycle traversed a->b->c->d->e->a; "ae" is stored against it
            edges.append(_edge(name, chord(u, v, name != "ae")))
        else:
            edges.append(_edge(name, straight(u, v), 1))
    return pos, edges


def lambda_drawing():
    """A 9-cycle drawn as a trefoil, vertex 3 at the centre, three outer chords.

    Rotation by -2pi/3 and a half-turn about a horizontal axis are symmetries.
    """
    order = ["1", "5", "4", "b", "a", "e", "d", "c", "2"]
    t_of = {v: (2 * j - 1) * math.pi / 9 for j, v in enumerate(order)}

    def curve(t):
        r = 2 + math.cos(3 * t)
        return np.array([r * math.cos(2 * t), r * math.sin(2 * t), math.sin(3 * t)])

    pos = {v: tuple(curve(t)) for v, t in t_of.items()}
    pos["3"] = (0.0, 0.0, 0.0)

    def along(u, v):
        tu, tv = t_of[u], t_of[v]
        step = (tv - tu + math.pi) % (2 * math.pi) - math.pi
        return lambda s: curve(tu + s * step)

    def radial(u, v):
        p, q = np.array(pos[u]), np.array(pos[v])
        return lambda s: p + s * (q - p)

    def bulge(u, v):
        p, q = np.array(pos[u]), np.array(pos[v])
        mid = math.atan2(p[1] + q[1], p[0] + q[0])
        apex = np.array([2.9 * math.cos(mid), 2.9 * math.sin(mid), (p[2] + q[2]) / 2])

        def f(s):
            if s <= 0.5:
                return p + 2 * s * (apex - p)
            return apex + (2 * s - 1) * (q - apex)
        return f

    cycle_edges = {frozenset((order[i], order[(i + 1) % 9])) for i in range(9)}
    edges = []
    for name in EDGE_IDS:
        u, v = name
        if frozenset(name) in cycle_edges:
            edges.append(_edge(name, along(u, v)))
        elif "3" in name:
            edges.append(_edge(name, radial(u, v), 1))
        else:
            edges.append(_edge(name, bulge(u, v), 2))
    return pos, edges


def delta_drawing():
    """Two great circles (Hopf link) in the 3-sphere joined by five spokes.

    The 5-cycles 12345 and abcde are the linked circles; the map
    (z1, z2) -> (w conj(z2), z1 / w) with w = exp(2 pi i / 5) is an
    orientation-reversing symmetry of order four.
    """
    w = cmath.exp(2j * math.pi / 5)
    x_phase = {str(k): k % 5 for k in range(1, 6)}
    y_phase = {"a": 0, "b": 1, "c": 2, "d": 3, "e": 4}

    def point(z1, z2):
        return np.array([z1.real, z1.imag, z2.real, z2.imag])

    def x_arc(u, v):
        a, b = 2 * math.pi * x_phase[u] / 5, 2 * math.pi * x_phase[v] / 5
        step = (b - a + math.pi) % (2 * math.pi) - math.pi
        return lambda s: point(cmath.exp(1j * (a + s * step)), 0j)

    def y_arc(u, v):
        a, b = 2 * math.pi * y_phase[u] / 5, 2 * math.pi * y_phase[v] / 5
        step = (b - a + math.pi) % (2 * math.pi) - math.pi
        return lambda s: point(0j, cmath.exp(1j * (a + s * step)))

    def spoke(u, v):
        zu = w ** x_phase[u]
        zv = w ** y_phase[v]
        return lambda s: point(math.cos(s * math.pi / 2) * zu, math.sin(s * math.pi / 2) * zv)

    rng = np.random.default_rng(20240517)
    basis, _ = np.linalg.qr(rng.normal(size=(4, 4)))
    pole = point(cmath.exp(1j * math.pi / 5) / math.sqrt(2), cmath.exp(0.37j) / math.sqrt(2))
    # Gram-Schmidt with the pole as the last frame vector
    frame = [pole]
    for col in basis.T:
        v = col - sum((col @ f) * f for f in frame)
        if np.linalg.norm(v) > 1e-6 and len(frame) < 4:
            frame.append(v / np.linalg.norm(v))
    frame = np.array(frame[1:] + frame[:1])
    if np.linalg.det(frame) < 0:
        frame[0] = -frame[0]

    def stereo(p4):
        c = frame @ p4
        return c[:3] / (1 - c[3])

    pos4 = {v: point(w ** x_phase[v], 0j) for v in "12345"}
    pos4.update({v: point(0j, w ** y_phase[v]) for v in "abcde"})
    pos = {v: tuple(stereo(p)) for v, p in pos4.items()}

    edges = []
    for name in EDGE_IDS:
        u, v = name
        if u.isdigit() and v.isdigit():
            f = x_arc(u, v)
        elif u.isalpha() and v.isalpha():
            f = y_arc(u, v)
        else:
            f = spoke(u, v)
        edges.append(PolylineEdge(name, u, v, _polyline(lambda s, f=f: stereo(f(s)), 40)))
    return pos, edges


DELTA_VIEW = (0.31, 0.47, 0.83)
LAMBDA_VIEW = None
GAMMA_VIEW = None


def build_gamma() -> SpatialDiagram:
    return diagram_from_polylines(*gamma_drawing(), direction=GAMMA_VIEW)


def build_lambda() -> SpatialDiagram:
    return diagram_from_polylines(*lambda_drawing(), direction=LAMBDA_VIEW)


def build_delta() -> SpatialDiagram:
    return diagram_from_polylines(*delta_drawing(), direction=DELTA_VIEW)


BUILDERS = {"gamma": build_gamma, "lambda": build_lambda, "delta": build_delta}
