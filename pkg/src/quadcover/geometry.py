"""Planar primitives: points, convex quadrilaterals, area and containment."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DegenerateQuad, NonConvex, SelfIntersecting

# relative tolerances (scaled by the bounding-box diagonal)
EPS_GEOM = 1e-9
_EPS_COLLINEAR = 1e-12


class Point2(NamedTuple):
    x: float
    y: float


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _segments_cross(p1, p2, p3, p4) -> bool:
    # proper crossing only; touching endpoints is caught by the collinearity test
    d1 = _cross(p3, p4, p1)
    d2 = _cross(p3, p4, p2)
    d3 = _cross(p1, p2, p3)
    d4 = _cross(p1, p2, p4)
    return d1 * d2 < 0 and d3 * d4 < 0


def _signed_area(pts) -> float:
    s = 0.0
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


@dataclass(frozen=True)
class Quadrilateral:
    """Strictly convex quadrilateral with vertices in counter-clockwise order.

    Build instances through :func:`convexity_check` (or
    :meth:`Quadrilateral.from_points`); the bare constructor does not validate.
    """

    vertices: tuple[Point2, Point2, Point2, Point2]

    @classmethod
    def from_points(cls, points) -> "Quadrilateral":
        return convexity_check(points)

    def as_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=float)

    @property
    def bbox_diagonal(self) -> float:
        v = self.as_array()
        return float(np.hypot(*(v.max(axis=0) - v.min(axis=0))))

    @property
    def centroid(self) -> Point2:
        """Mean of the vertices (not the area centroid)."""
        v = self.as_array().mean(axis=0)
        return Point2(float(v[0]), float(v[1]))

    def edges(self):
        for i in range(4):
            yield self.vertices[i], self.vertices[(i + 1) % 4]


def convexity_check(vertices: Sequence[Sequence[float]]) -> Quadrilateral:
    """Validate four vertices and return the CCW-normalized quadrilateral.

    Raises DegenerateQuad, SelfIntersecting or NonConvex.
    """
    pts = [Point2(float(p[0]), float(p[1])) for p in vertices]
    if len(pts) != 4:
        raise DegenerateQuad(f"expected 4 vertices, got {len(pts)}")
    for p in pts:
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            raise DegenerateQuad(f"non-finite vertex {p}")

    arr = np.array(pts)
    diag = float(np.hypot(*(arr.max(axis=0) - arr.min(axis=0))))
    if diag == 0.0:
        raise DegenerateQuad("all vertices coincide")
    tol = _EPS_COLLINEAR * diag * diag
    for i in range(4):
        for j in range(i + 1, 4):
            for k in range(j + 1, 4):
                if abs(_cross(pts[i], pts[j], pts[k])) <= tol:
                    raise DegenerateQuad(f"vertices {i + 1}, {j + 1}, {k + 1} are collinear")

    if _segments_cross(pts[0], pts[1], pts[2], pts[3]) or _segments_cross(
        pts[1], pts[2], pts[3], pts[0]
    ):
        raise SelfIntersecting("opposite edges cross")

    turns = [_cross(pts[i], pts[(i + 1) % 4], pts[(i + 2) % 4]) for i in range(4)]
    if not (all(t > 0 for t in turns) or all(t < 0 for t in turns)):
        raise NonConvex("consecutive edge cross products change sign")

    if _signed_area(pts) < 0:
        # keep the first vertex, reverse the traversal
        pts = [pts[0], pts[3], pts[2], pts[1]]
    return Quadrilateral(tuple(pts))


def shoelace_area(q: Quadrilateral) -> float:
    return _signed_area(q.vertices)


def polygon_area(points) -> float:
    """Signed shoelace area of an arbitrary simple polygon."""
    return _signed_area([tuple(p) for p in points])


def edge_margins(q: Quadrilateral, pts) -> np.ndarray:
    """Signed distance of each point to the nearest edge line (positive inside).

    ``pts`` is an (n, 2) array; returns an (n,) array.
    """
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    out = np.full(len(pts), np.inf)
    for a, b in q.edges():
        ex, ey = b[0] - a[0], b[1] - a[1]
        norm = math.hypot(ex, ey)
        # inward normal of a CCW polygon is the left normal
        d = ((pts[:, 1] - a[1]) * ex - (pts[:, 0] - a[0]) * ey) / norm
        out = np.minimum(out, d)
    return out


def contains_points(q: Quadrilateral, pts, tol: float | None = None) -> np.ndarray:
    """Vectorized :func:`contains_point`."""
    if tol is None:
        tol = EPS_GEOM * q.bbox_diagonal
    return edge_margins(q, pts) >= -tol


def contains_point(q: Quadrilateral, p, tol: float | None = None) -> bool:
    """True if ``p`` is inside ``q`` or within ``tol`` of its boundary."""
    return bool(contains_points(q, [p], tol)[0])
