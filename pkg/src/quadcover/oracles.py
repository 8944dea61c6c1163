"""Independent numerical oracles used by `verify` and the test-suite.

Nothing here calls the closed-form footprint/placement formulas; each oracle
recomputes its quantity by a different route (ray tracing, least squares,
eigen-decomposition).
"""
from __future__ import annotations

import math

import numpy as np


def trace_cone(h: float, psi_deg: float, theta_deg: float, n: int = 256) -> np.ndarray:
    """Ground hits of rays on a circular cone.

    Apex at (0, 0, h); the axis is tilted ``psi`` from the downward vertical
    toward +x; ``theta`` is the half-angle. Returns an (n, 2) array.
    """
    psi, theta = math.radians(psi_deg), math.radians(theta_deg)
    axis = np.array([math.sin(psi), 0.0, -math.cos(psi)])
    e1 = np.array([math.cos(psi), 0.0, math.sin(psi)])
    e2 = np.array([0.0, 1.0, 0.0])
    az = np.linspace(0.0, 2 * np.pi, n, endpoint=False)
    rays = (
        math.cos(theta) * axis
        + math.sin(theta) * (np.outer(np.cos(az), e1) + np.outer(np.sin(az), e2))
    )
    if np.any(rays[:, 2] >= 0):
        raise ValueError("cone edge does not reach the ground (psi + theta >= 90 deg)")
    t = h / -rays[:, 2]
    return rays[:, :2] * t[:, None]


def fit_conic(pts) -> np.ndarray:
    """Least-squares conic (A..F) through points, via the SVD null vector."""
    pts = np.asarray(pts, dtype=float)
    shift = pts.mean(axis=0)
    scale = np.abs(pts - shift).max()
    x, y = ((pts - shift) / scale).T
    design = np.column_stack([x * x, x * y, y * y, x, y, np.ones_like(x)])
    A, B, C, D, E, F = np.linalg.svd(design)[2][-1]
    # undo the affine normalization: u = (X - sx)/s
    sx, sy = shift
    s = scale
    A2, B2, C2 = A / s**2, B / s**2, C / s**2
    D2 = D / s - 2 * A2 * sx - B2 * sy
    E2 = E / s - 2 * C2 * sy - B2 * sx
    F2 = F + A2 * sx * sx + B2 * sx * sy + C2 * sy * sy - D / s * sx - E / s * sy
    return np.array([A2, B2, C2, D2, E2, F2])


def ellipse_from_coeffs(coeffs):
    """(center, a, b, major-axis direction) by eigen-decomposition."""
    A, B, C, D, E, F = coeffs
    q = np.array([[A, B / 2], [B / 2, C]])
    center = np.linalg.solve(2 * q, [-D, -E])
    f0 = F + 0.5 * (D * center[0] + E * center[1])
    evals, evecs = np.linalg.eigh(q / -f0)
    if np.any(evals <= 0):
        raise ValueError("not an ellipse")
    # smaller eigenvalue <-> longer semi-axis
    a, b = 1 / math.sqrt(evals[0]), 1 / math.sqrt(evals[1])
    return center, a, b, evecs[:, 0]


def cone_footprint(h: float, psi_deg: float, theta_deg: float, n: int = 256):
    """Semi-axes and center offset of the traced footprint: (a, b, d, minor_offset)."""
    center, a, b, _ = ellipse_from_coeffs(fit_conic(trace_cone(h, psi_deg, theta_deg, n)))
    return a, b, float(center[0]), float(center[1])


def winding_number(polygon, p) -> int:
    """Winding number of a closed polygon around p (crossing-count form)."""
    wn = 0
    px, py = p
    n = len(polygon)
    for i in range(n):
        x0, y0 = polygon[i]
        x1, y1 = polygon[(i + 1) % n]
        side = (x1 - x0) * (py - y0) - (px - x0) * (y1 - y0)
        if y0 <= py < y1 and side > 0:
            wn += 1
        elif y1 <= py < y0 and side < 0:
            wn -= 1
    return wn
