"""Circle-to-conic mapping under a homography and ellipse extraction."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import NotAnEllipse, NotBounded
from .geometry import Point2
from .homography import Homography

TOL_TANGENT = 1e-6
_PARABOLA_EPS = 1e-10
_DEGENERATE_EPS = 1e-12
_CIRCLE_EPS = 1e-9


class ConicKind(enum.Enum):
    ELLIPSE = "ellipse"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    DEGENERATE = "degenerate"


class Relation(enum.Enum):
    DISJOINT = "disjoint"
    TANGENT = "tangent"
    OVERLAPPING = "overlapping"


@dataclass(frozen=True)
class Conic:
    """Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0, scaled so max |coeff| == 1.

    The overall sign is fixed so that A + C > 0 (or, failing that, the first
    nonzero coefficient is positive); the ellipse test below depends on it.
    """

    A: float
    B: float
    C: float
    D: float
    E: float
    F: float

    @classmethod
    def normalized(cls, A, B, C, D, E, F) -> "Conic":
        coeffs = np.array([A, B, C, D, E, F], dtype=float)
        if not np.any(coeffs[:3]):
            raise ValueError("A, B and C are all zero: not a second-degree curve")
        coeffs /= np.abs(coeffs).max()
        trace = coeffs[0] + coeffs[2]
        if trace < 0 or (trace == 0 and coeffs[np.flatnonzero(coeffs)[0]] < 0):
            coeffs = -coeffs
        return cls(*(float(c) for c in coeffs))

    @property
    def coeffs(self) -> tuple[float, ...]:
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    def scaled(self, lam: float) -> "Conic":
        """Raw rescaling without renormalization (for invariance checks)."""
        return Conic(*(lam * c for c in self.coeffs))

    def matrix(self) -> np.ndarray:
        A, B, C, D, E, F = self.coeffs
        return np.array([[A, B / 2, D / 2], [B / 2, C, E / 2], [D / 2, E / 2, F]])

    def evaluate(self, pts) -> np.ndarray:
        pts = np.atleast_2d(np.asarray(pts, dtype=float))
        x, y = pts[:, 0], pts[:, 1]
        A, B, C, D, E, F = self.coeffs
        return A * x * x + B * x * y + C * y * y + D * x + E * y + F

    @property
    def discriminant(self) -> float:
        return 4 * self.A * self.C - self.B**2

    @property
    def boundedness(self) -> float:
        """C D^2 + A E^2 - B D E - 4 A C F + B^2 F; positive for a real ellipse."""
        A, B, C, D, E, F = self.coeffs
        return C * D * D + A * E * E - B * D * E - 4 * A * C * F + B * B * F


@dataclass(frozen=True)
class Circle:
    center: Point2
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        object.__setattr__(self, "center", Point2(float(self.center[0]), float(self.center[1])))

    def general_form(self) -> tuple[float, float, float, float]:
        """(A, D, E, F) of A x^2 + A y^2 + D x + E y + F = 0 with A = 1."""
        cx, cy = self.center
        return 1.0, -2 * cx, -2 * cy, cx * cx + cy * cy - self.radius**2


@dataclass(frozen=True)
class EllipseFootprint:
    center: Point2
    a: float
    b: float
    phi: float
    index: int = 0

    @property
    def major_axis(self) -> np.ndarray:
        return np.array([math.cos(self.phi), math.sin(self.phi)])

    @property
    def minor_axis(self) -> np.ndarray:
        return np.array([-math.sin(self.phi), math.cos(self.phi)])

    def boundary(self, n: int = 64) -> np.ndarray:
        t = np.linspace(0.0, 2 * np.pi, n, endpoint=False)
        return self.boundary_at(t)

    def boundary_at(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        c = np.asarray(self.center)
        return (
            c
            + np.multiply.outer(self.a * np.cos(t), self.major_axis)
            + np.multiply.outer(self.b * np.sin(t), self.minor_axis)
        )

    def level(self, pts) -> np.ndarray:
        """Canonical implicit value (u/a)^2 + (v/b)^2 - 1; negative inside."""
        d = np.atleast_2d(np.asarray(pts, dtype=float)) - np.asarray(self.center)
        u = d @ self.major_axis
        v = d @ self.minor_axis
        return (u / self.a) ** 2 + (v / self.b) ** 2 - 1.0

    def contains(self, pts) -> np.ndarray:
        return self.level(pts) <= 0.0

    def to_conic(self) -> Conic:
        c, s = math.cos(self.phi), math.sin(self.phi)
        ia, ib = 1 / self.a**2, 1 / self.b**2
        A = c * c * ia + s * s * ib
        C = s * s * ia + c * c * ib
        B = 2 * c * s * (ia - ib)
        x0, y0 = self.center
        D = -2 * A * x0 - B * y0
        E = -B * x0 - 2 * C * y0
        F = A * x0 * x0 + B * x0 * y0 + C * y0 * y0 - 1
        return Conic.normalized(A, B, C, D, E, F)


def map_circle(h: Homography, c: Circle) -> Conic:
    """Image of a circle under ``h``, built from the inverse-map coefficients."""
    A, D, E, F = c.general_form()
    (h11, h12, h13), (h21, h22, h23), (h31, h32, h33) = h.hhat
    Ap = A * (h11**2 + h21**2) + h31 * (D * h11 + E * h21) + F * h31**2
    Bp = (
        h11 * (2 * A * h12 + D * h32)
        + h21 * (2 * A * h22 + E * h32)
        + h31 * (D * h12 + E * h22 + 2 * F * h32)
    )
    Cp = A * (h12**2 + h22**2) + h32 * (D * h12 + E * h22) + F * h32**2
    Dp = (
        h11 * (2 * A * h13 + D * h33)
        + h21 * (2 * A * h23 + E * h33)
        + h31 * (D * h13 + E * h23 + 2 * F * h33)
    )
    Ep = (
        h12 * (2 * A * h13 + D * h33)
        + h22 * (2 * A * h23 + E * h33)
        + h32 * (D * h13 + E * h23 + 2 * F * h33)
    )
    Fp = A * (h13**2 + h23**2) + h33 * (D * h13 + E * h23) + F * h33**2
    conic = Conic.normalized(Ap, Bp, Cp, Dp, Ep, Fp)
    kind = classify(conic)
    if kind is not ConicKind.ELLIPSE:
        raise NotBounded(f"circle {c} maps to a {kind.value}")
    return conic


def classify(c: Conic) -> ConicKind:
    # thresholds are relative to the quadratic part: on meter-scale curves
    # A, B, C are many orders of magnitude below F
    c = Conic.normalized(*c.coeffs)
    A, B, C, D, E, F = c.coeffs
    quad = max(abs(A), abs(B), abs(C))
    disc = c.discriminant
    if abs(disc) <= _PARABOLA_EPS * quad**2:
        scale = max(abs(v) for v in c.coeffs)
        if abs(np.linalg.det(c.matrix())) <= _DEGENERATE_EPS * scale**3:
            return ConicKind.DEGENERATE
        return ConicKind.PARABOLA
    # value of the left-hand side at the center; zero means a point or line pair
    cx = (B * E - 2 * C * D) / disc
    cy = (B * D - 2 * A * E) / disc
    f0 = F + (D * cx + E * cy) / 2
    if abs(f0) <= _DEGENERATE_EPS * (abs(F) + abs(D * cx) / 2 + abs(E * cy) / 2):
        return ConicKind.DEGENERATE
    if disc < 0:
        return ConicKind.HYPERBOLA
    # boundedness > 0 <=> f0 < 0; otherwise an imaginary ellipse
    if c.boundedness > 0:
        return ConicKind.ELLIPSE
    return ConicKind.DEGENERATE


def extract_ellipse(c: Conic, index: int = 0) -> EllipseFootprint:
    """Center, semi-axes and major-axis orientation of an ellipse conic."""
    kind = classify(c)
    if kind is not ConicKind.ELLIPSE:
        raise NotAnEllipse(f"conic {c.coeffs} is a {kind.value}")
    A, B, C, D, E, F = Conic.normalized(*c.coeffs).coeffs
    delta2 = 4 * A * C - B * B
    cx = (B * E - 2 * C * D) / delta2
    cy = (B * D - 2 * A * E) / delta2
    # C D^2 + A E^2 - B D E - F delta2 == -delta2 * f0 with f0 the value at the
    # center; the center form avoids cancelling large terms far from the origin
    f0 = F + (D * cx + E * cy) / 2
    mu = -4 * f0 / delta2
    root = math.hypot(A - C, B)
    a = math.sqrt(mu / 2 * (A + C + root))
    # A + C - root == delta2 / (A + C + root), without the cancellation
    b = math.sqrt(mu / 2 * delta2 / (A + C + root))
    if a - b <= _CIRCLE_EPS * a:
        phi = 0.0
    else:
        # 0.5*atan2(B, A - C) is the steepest (minor) direction of the quadratic form
        phi = 0.5 * math.atan2(B, A - C) + math.pi / 2
        if phi > math.pi / 2:
            phi -= math.pi
    return EllipseFootprint(Point2(cx, cy), a, b, phi, index)


def ellipse_area(e: EllipseFootprint) -> float:
    return math.pi * e.a * e.b


def _min_level_on_boundary(e1: EllipseFootprint, e2: EllipseFootprint, samples: int = 720):
    t = np.linspace(0.0, 2 * np.pi, samples, endpoint=False)
    g = e2.level(e1.boundary_at(t))
    step = 2 * np.pi / samples
    best = float(g.min())
    # refine around every sampled local minimum
    idx = np.flatnonzero((g <= np.roll(g, 1)) & (g <= np.roll(g, -1)))
    for i in idx:
        res = minimize_scalar(
            lambda s: float(e2.level(e1.boundary_at([s]))[0]),
            bounds=(t[i] - step, t[i] + step),
            method="bounded",
            options={"xatol": 1e-12},
        )
        best = min(best, float(res.fun))
    return best


def tangency_check(e1: EllipseFootprint, e2: EllipseFootprint, tol: float = TOL_TANGENT) -> Relation:
    """Classify two ellipses as disjoint, externally tangent or overlapping.

    Uses the sign of e2's canonical level function along e1's boundary (and
    vice versa, so that containment of either one counts as overlap).
    """
    m = min(_min_level_on_boundary(e1, e2), _min_level_on_boundary(e2, e1))
    if m < -tol:
        return Relation.OVERLAPPING
    if e1.contains([e2.center])[0] or e2.contains([e1.center])[0]:
        return Relation.OVERLAPPING
    if m <= tol:
        return Relation.TANGENT
    return Relation.DISJOINT
