"""Four-point homography: DLT system, solution, forward/inverse maps.

A homography is stored as a 3x3 matrix scaled to unit Frobenius norm with
``h33 >= 0`` (when ``h33 == 0`` the first nonzero entry in row-major order is
made positive). With that convention the solution of a given point
configuration is unique.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DegenerateConfiguration, LineAtInfinity
from .geometry import Point2, Quadrilateral, convexity_check

UNIT_SQUARE = convexity_check([(0, 0), (1, 0), (1, 1), (0, 1)])

_DEGENERACY_RATIO = 1e-12
_DENOM_EPS = 1e-14
_INFINITY_EPS = 1e-12


def _normalize(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float).reshape(3, 3)
    norm = np.linalg.norm(m)
    if norm == 0.0:
        raise DegenerateConfiguration("zero matrix")
    m = m / norm
    if m[2, 2] < 0:
        m = -m
    elif m[2, 2] == 0:
        first = m.ravel()[np.flatnonzero(m.ravel())[0]]
        if first < 0:
            m = -m
    return m


def adjugate(m: np.ndarray) -> np.ndarray:
    """Classical adjugate, so that ``m @ adjugate(m) == det(m) * I``."""
    (h11, h12, h13), (h21, h22, h23), (h31, h32, h33) = m
    return np.array(
        [
            [h22 * h33 - h23 * h32, h13 * h32 - h12 * h33, h12 * h23 - h13 * h22],
            [h23 * h31 - h21 * h33, h11 * h33 - h13 * h31, h13 * h21 - h11 * h23],
            [h21 * h32 - h22 * h31, h12 * h31 - h11 * h32, h11 * h22 - h12 * h21],
        ]
    )


@dataclass(frozen=True)
class Homography:
    h: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = _normalize(self.h)
        m.setflags(write=False)
        object.__setattr__(self, "h", m)
        if abs(np.linalg.det(m)) <= 1e-12:
            raise DegenerateConfiguration(f"singular homography (det={np.linalg.det(m):.3e})")

    @property
    def hhat(self) -> np.ndarray:
        """Inverse-map coefficients (the adjugate of ``h``)."""
        return adjugate(self.h)

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.h))

    def rounded(self, decimals: int) -> "Homography":
        """Round the normalized entries, then renormalize.

        Reproduces results computed from a matrix published to a fixed number
        of decimals; the projective map changes, not just its scale.
        """
        return Homography(np.round(self.h, decimals))

    def __repr__(self):
        rows = ", ".join("[" + ", ".join(f"{v:.6g}" for v in r) + "]" for r in self.h)
        return f"Homography([{rows}])"


def _vertices(q) -> list[Point2]:
    # a Quadrilateral is CCW-normalized; a plain list keeps the caller's order
    if isinstance(q, Quadrilateral):
        return list(q.vertices)
    pts = [Point2(float(p[0]), float(p[1])) for p in q]
    if len(pts) != 4:
        raise DegenerateConfiguration(f"need 4 correspondences, got {len(pts)}")
    return pts


def build_dlt_matrix(src, dst) -> np.ndarray:
    """8x9 matrix B with B @ vec(H) = 0 for the four correspondences.

    ``src``/``dst`` are Quadrilaterals or plain sequences of four points.
    """
    rows = []
    for (x, y), (u, v) in zip(_vertices(src), _vertices(dst)):
        rows.append([-x, -y, -1.0, 0.0, 0.0, 0.0, u * x, u * y, u])
        rows.append([0.0, 0.0, 0.0, -x, -y, -1.0, v * x, v * y, v])
    return np.array(rows, dtype=float)


def _conditioner(pts) -> np.ndarray:
    """Similarity moving the points' centroid to 0 and mean distance to sqrt(2)."""
    pts = np.asarray(pts, dtype=float)
    c = pts.mean(axis=0)
    spread = np.linalg.norm(pts - c, axis=1).mean()
    if not spread > 0:
        raise DegenerateConfiguration("all points coincide")
    s = np.sqrt(2.0) / spread
    return np.array([[s, 0.0, -s * c[0]], [0.0, s, -s * c[1]], [0.0, 0.0, 1.0]])


def solve_homography(src, dst) -> Homography:
    """Homography taking vertex i of ``src`` to vertex i of ``dst``.

    The null vector of B is the eigenvector of B^T B with the smallest
    eigenvalue. Both point sets are conditioned first (centered, scaled to
    unit size) because B^T B squares the condition number of meter-scale
    input. Degeneracy is judged on the singular values of B itself.
    """
    src, dst = _vertices(src), _vertices(dst)
    t_src, t_dst = _conditioner(src), _conditioner(dst)
    b = build_dlt_matrix(_transform(t_src, src), _transform(t_dst, dst))
    sv = np.linalg.svd(b, compute_uv=False)
    if sv[7] / sv[0] < _DEGENERACY_RATIO:
        raise DegenerateConfiguration(f"DLT matrix has rank < 8 (sigma8/sigma1={sv[7] / sv[0]:.3e})")
    _, vecs = np.linalg.eigh(b.T @ b)
    hn = vecs[:, 0].reshape(3, 3)
    return Homography(np.linalg.solve(t_dst, hn @ t_src))


def _transform(m, pts) -> list[tuple[float, float]]:
    hom = np.asarray(pts, dtype=float) @ m[:, :2].T + m[:, 2]
    return [tuple(r) for r in hom[:, :2] / hom[:, 2:3]]


def quad_to_quad(dst, src=UNIT_SQUARE) -> Homography:
    return solve_homography(src, dst)


def _denominator(row, x, y):
    return row[0] * x + row[1] * y + row[2]


def apply(h: Homography, p) -> Point2:
    m = h.h
    x, y = float(p[0]), float(p[1])
    w = _denominator(m[2], x, y)
    if abs(w) < _DENOM_EPS:
        raise LineAtInfinity(f"({x}, {y}) maps to infinity")
    return Point2(_denominator(m[0], x, y) / w, _denominator(m[1], x, y) / w)


def apply_inverse(h: Homography, p) -> Point2:
    m = h.hhat
    x, y = float(p[0]), float(p[1])
    w = _denominator(m[2], x, y)
    if abs(w) < _DENOM_EPS * np.abs(m).max():
        raise LineAtInfinity(f"({x}, {y}) is the image of a point at infinity")
    return Point2(_denominator(m[0], x, y) / w, _denominator(m[1], x, y) / w)


def apply_many(h: Homography, pts, inverse: bool = False) -> np.ndarray:
    """Vectorized forward (or inverse) map of an (n, 2) array."""
    m = h.hhat if inverse else h.h
    pts = np.asarray(pts, dtype=float)
    hom = pts @ m[:, :2].T + m[:, 2]
    return hom[:, :2] / hom[:, 2:3]


def map_quad(h: Homography, q: Quadrilateral = UNIT_SQUARE) -> Quadrilateral:
    return convexity_check([apply(h, v) for v in q.vertices])


def vanishing_points(h: Homography) -> tuple[Optional[Point2], Optional[Point2]]:
    """Images of the horizontal and vertical line families' common point.

    ``None`` stands for a point at infinity (the family stays parallel).
    """
    m = h.h
    scale = np.abs(m).max()
    out = []
    for col in (0, 1):
        if abs(m[2, col]) < _INFINITY_EPS * scale:
            out.append(None)
        else:
            out.append(Point2(m[0, col] / m[2, col], m[1, col] / m[2, col]))
    return out[0], out[1]


def jacobian_det(h: Homography, p) -> float:
    m = h.h
    x, y = float(p[0]), float(p[1])
    w = _denominator(m[2], x, y)
    if abs(w) < _DENOM_EPS:
        raise LineAtInfinity(f"({x}, {y}) maps to infinity")
    (h11, h12, h13), (h21, h22, h23), (h31, h32, h33) = m
    num = (
        h31 * (h12 * h23 - h13 * h22)
        + h32 * (h13 * h21 - h11 * h23)
        + h33 * (h11 * h22 - h12 * h21)
    )
    return num / w**3
