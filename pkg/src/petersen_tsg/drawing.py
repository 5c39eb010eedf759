"""Build diagram codes from 3D polyline drawings of a spatial graph.

The drawing is projected orthogonally onto a plane; crossings are the
intersections of projected segments, with over/under decided by height.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .diagram import Decoration, SpatialDiagram, natural_key

Point = Sequence[float]

_EPS = 1e-9


class DegenerateProjection(ValueError):
    """Projection is not generic: tangencies, triple points or crossings at breakpoints."""


@dataclass(frozen=True)
class PolylineEdge:
    name: str
    u: str
    v: str
    points: tuple[tuple[float, float, float], ...]


def view_frame(direction: Point | None) -> np.ndarray:
    """Rotation taking ``direction`` to +z; the viewer looks down from +z."""
    if direction is None:
        return np.eye(3)
    z = np.asarray(direction, dtype=float)
    z /= np.linalg.norm(z)
    helper = np.array([1.0, 0.0, 0.0]) if abs(z[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    x = helper - z * (helper @ z)
    x /= np.linalg.norm(x)
    y = np.cross(z, x)
    return np.stack([x, y, z])


def _segment_hit(p, r, q, s):
    """Parameters (t, u) where p + t r meets q + u s, or None."""
    denom = r[0] * s[1] - r[1] * s[0]
    if abs(denom) < _EPS:
        return None
    d = (q[0] - p[0], q[1] - p[1])
    t = (d[0] * s[1] - d[1] * s[0]) / denom
    u = (d[0] * r[1] - d[1] * r[0]) / denom
    return t, u


def diagram_from_polylines(
    vertices: dict[str, Point],
    edges: Sequence[PolylineEdge],
    direction: Point | None = None,
    decorations: dict[str, Sequence[Decoration]] | None = None,
    min_gap: float = 1e-6,
) -> SpatialDiagram:
    frame = view_frame(direction)
    proj = {}
    for e in edges:
        if not (np.allclose(e.points[0], vertices[e.u]) and np.allclose(e.points[-1], vertices[e.v])):
            raise ValueError(f"polyline of {e.name} does not join {e.u} to {e.v}")
        proj[e.name] = [tuple(frame @ np.asarray(p, dtype=float)) for p in e.points]

    segs = []
    for e in edges:
        pts = proj[e.name]
        for i in range(len(pts) - 1):
            a, b = pts[i], pts[i + 1]
            segs.append((e, i, a, b, (min(a[0], b[0]), max(a[0], b[0]), min(a[1], b[1]), max(a[1], b[1]))))

    last = {e.name: len(proj[e.name]) - 2 for e in edges}
    hits = []
    for i in range(len(segs)):
        e1, k1, a1, b1, box1 = segs[i]
        for j in range(i + 1, len(segs)):
            e2, k2, a2, b2, box2 = segs[j]
            if box1[1] < box2[0] or box2[1] < box1[0] or box1[3] < box2[2] or box2[3] < box1[2]:
                continue
            if e1.name == e2.name and abs(k1 - k2) <= 1:
                continue
            shared = _shared_end(e1, k1, e2, k2, last)
            if shared:
                continue
            r = (b1[0] - a1[0], b1[1] - a1[1])
            s = (b2[0] - a2[0], b2[1] - a2[1])
            hit = _segment_hit(a1, r, a2, s)
            if hit is None:
                continue
            t, u = hit
            if -_EPS < t < 1 + _EPS and -_EPS < u < 1 + _EPS:
                if min(t, 1 - t, u, 1 - u) < 1e-7:
                    raise DegenerateProjection(f"crossing of {e1.name} and {e2.name} at a polyline breakpoint")
                z1 = a1[2] + t * (b1[2] - a1[2])
                z2 = a2[2] + u * (b2[2] - a2[2])
                if abs(z1 - z2) < min_gap:
                    raise DegenerateProjection(f"{e1.name} and {e2.name} intersect in space")
                first = (e1.name, k1 + t, r)
                second = (e2.name, k2 + u, s)
                under, over = (first, second) if z1 < z2 else (second, first)
                point = (a1[0] + t * r[0], a1[1] + t * r[1])
                hits.append((under, over, point))
    return _assemble(vertices, edges, proj, hits, decorations or {})


def _shared_end(e1, k1, e2, k2, last):
    ends1 = set()
    if k1 == 0:
        ends1.add(e1.u)
    if k1 == last[e1.name]:
        ends1.add(e1.v)
    ends2 = set()
    if k2 == 0:
        ends2.add(e2.u)
    if k2 == last[e2.name]:
        ends2.add(e2.v)
    return bool(ends1 & ends2)


def _assemble(vertices, edges, proj, hits, decorations):
    # passes along each edge, ordered by position
    along = defaultdict(list)
    for h, (under, over, _) in enumerate(hits):
        along[under[0]].append((under[1], h, "under"))
        along[over[0]].append((over[1], h, "over"))
    darts_at = {}  # (hit, role) -> (in dart, out dart)
    n_darts = {}
    for e in edges:
        passes = sorted(along[e.name])
        for a, b in zip(passes, passes[1:]):
            if b[0] - a[0] < 1e-9:
                raise DegenerateProjection(f"triple point on {e.name}")
        for j, (_, h, role) in enumerate(passes, start=1):
            darts_at[(h, role)] = (f"{e.name}.{2 * j - 1}", f"{e.name}.{2 * j}")
        n_darts[e.name] = 2 * len(passes) + 2

    order = sorted(range(len(hits)), key=lambda h: (natural_key(hits[h][0][0]), hits[h][0][1]))
    crossings = {}
    for idx, h in enumerate(order, start=1):
        (_, _, u_dir), (_, _, o_dir), _ = hits[h]
        u_in, u_out = darts_at[(h, "under")]
        o_in, o_out = darts_at[(h, "over")]
        cross = -u_dir[0] * o_dir[1] + u_dir[1] * o_dir[0]
        if cross > 0:
            crossings[f"x{idx}"] = (u_in, o_out, u_out, o_in)
        else:
            crossings[f"x{idx}"] = (u_in, o_in, u_out, o_out)

    rays = defaultdict(list)
    for e in edges:
        pts = proj[e.name]
        start = (pts[1][0] - pts[0][0], pts[1][1] - pts[0][1])
        end = (pts[-2][0] - pts[-1][0], pts[-2][1] - pts[-1][1])
        rays[e.u].append((math.atan2(start[1], start[0]), f"{e.name}.0"))
        rays[e.v].append((math.atan2(end[1], end[0]), f"{e.name}.{n_darts[e.name] - 1}"))
    flat = {}
    for name in vertices:
        ds = [d for _, d in sorted(rays[name])]
        k = min(range(len(ds)), key=lambda i: natural_key(ds[i]))
        flat[name] = tuple(ds[k:] + ds[:k])

    arcs = []
    for e in edges:
        for j in range(0, n_darts[e.name], 2):
            arcs.append((f"{e.name}.{j}", f"{e.name}.{j + 1}", e.name))
    return SpatialDiagram(
        vertices=tuple(sorted(vertices, key=natural_key)),
        edges={e.name: (e.u, e.v) for e in edges},
        flat_vertices=flat,
        crossings=crossings,
        arcs=tuple(arcs),
        decorations={k: tuple(v) for k, v in decorations.items() if v},
    )
