"""Per-UAV altitude, antenna angles and 3-D position for one footprint."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import Environment, LinkGeometry, pl_max
from .conic import EllipseFootprint
from .errors import NoInteriorMinimum
from .geometry import Point2

H_MIN = 1.0
H_MAX = 10_000.0
H_TOL = 1e-4
_CIRCULAR_EPS = 1e-9
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class UavPlacement:
    footprint: EllipseFootprint
    h_opt: float
    pl_max_db: float
    psi: float  # deg, boresight tilt from vertical
    theta: float  # deg, beam half-angle
    proj: Point2
    position: tuple[float, float, float]

    @property
    def index(self) -> int:
        return self.footprint.index

    @property
    def offset(self) -> float:
        return math.dist(self.proj, self.footprint.center)


def golden_section(f, lo: float, hi: float, tol: float = H_TOL) -> float:
    """Minimizer of a unimodal ``f`` on [lo, hi] to absolute tolerance ``tol``."""
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = f(x2)
    return 0.5 * (lo + hi)


def optimize_altitude(env: Environment, a: float, b: float, f: float = 2e9,
                      h_min: float = H_MIN, h_max: float = H_MAX, tol: float = H_TOL):
    """Altitude minimizing the worst-case path loss, and that loss in dB."""
    if not a >= b > 0:
        raise ValueError(f"need a >= b > 0, got a={a}, b={b}")

    def loss(h):
        return float(pl_max(env, LinkGeometry(a, b, h, f)))

    h = golden_section(loss, h_min, h_max, tol)
    if h - h_min < 10 * tol or h_max - h < 10 * tol:
        raise NoInteriorMinimum(
            f"path loss minimum for a={a:.6g}, b={b:.6g} lies on the search boundary (h={h:.6g})"
        )
    return h, loss(h)


def antenna_angles(a: float, b: float, h: float) -> tuple[float, float]:
    """(tilt psi, semi-apex theta) in degrees for footprint semi-axes a >= b."""
    if a - b <= _CIRCULAR_EPS * a:
        return 0.0, math.degrees(math.atan2(b, h))
    root = math.sqrt(a * a * h * h + b**4)
    ratio = min(1.0, math.sqrt(b * b * h * h + b**4) / root)
    psi = math.acos(ratio)
    theta = math.asin(b * b / root)
    return math.degrees(psi), math.degrees(theta)


def projection_offset(a: float, b: float, h: float) -> float:
    """Distance from footprint center to the UAV ground projection (major axis)."""
    if a - b <= _CIRCULAR_EPS * a:
        return 0.0
    return math.sqrt((a * a - b * b) * (b * b + h * h)) / b


def assemble_placement(env: Environment, e: EllipseFootprint, f: float = 2e9,
                       offset_sign: int = 1) -> UavPlacement:
    if offset_sign not in (1, -1):
        raise ValueError(f"offset_sign must be +1 or -1, got {offset_sign}")
    h, loss = optimize_altitude(env, e.a, e.b, f)
    psi, theta = antenna_angles(e.a, e.b, h)
    d = projection_offset(e.a, e.b, h)
    px, py = np.asarray(e.center) + offset_sign * d * e.major_axis
    proj = Point2(float(px), float(py))
    return UavPlacement(e, h, loss, psi, theta, proj, (proj.x, proj.y, h))


def cone_consistency_error(p: UavPlacement) -> float:
    """Largest relative mismatch between the cone edges and the footprint vertices.

    The boresight and both cone edges lie in the vertical plane through the
    major axis; their ground hits must be the far and near vertices.
    """
    e = p.footprint
    u = e.major_axis
    rel = np.asarray(e.center) - np.asarray(p.proj)
    # signed distances along the tilt direction (from proj toward the footprint)
    along = float(rel @ u)
    s = 1.0 if along >= 0 else -1.0
    far = s * along + e.a
    near = s * along - e.a
    h, psi, theta = p.h_opt, math.radians(p.psi), math.radians(p.theta)
    err_far = abs(h * math.tan(psi + theta) - far) / max(abs(far), 1.0)
    err_near = abs(h * math.tan(psi - theta) - near) / max(abs(far), 1.0)
    perp = abs(float(rel @ e.minor_axis))
    return max(err_far, err_near, perp / max(e.a, 1.0))
