"""Scenario -> homography -> footprints -> placements -> coverage metrics."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from . import geometry
from .channel import Environment
from .conic import (
    Conic,
    EllipseFootprint,
    Relation,
    ellipse_area,
    extract_ellipse,
    map_circle,
    tangency_check,
)
from .errors import PlanningError, QuadCoverError
from .geometry import Quadrilateral, convexity_check, shoelace_area
from .homography import Homography, map_quad, quad_to_quad
from .packing import PackingConfig, circle_relations, get_packing, grid_packing
from .placement import UavPlacement, assemble_placement

OFFSET_POLICIES = ("toward-centroid", "away-from-centroid", "positive", "negative")
BOUNDARY_SAMPLES = 64


@dataclass(frozen=True)
class Scenario:
    """Planning input.

    ``homography_decimals`` rounds the solved matrix before use. Leave it at
    None for exact geometry; 4 reproduces results derived from a matrix
    printed to four decimals.
    """

    quad: Quadrilateral
    m: int
    f: float = 2e9
    env: Environment = None
    packing: Optional[PackingConfig] = None
    offset_policy: str = "toward-centroid"
    homography_decimals: Optional[int] = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if not self.f > 0:
            raise ValueError(f"frequency must be positive, got {self.f}")
        if self.env is None:
            raise ValueError("scenario needs an environment")
        if self.offset_policy not in OFFSET_POLICIES:
            raise ValueError(f"unknown offset policy {self.offset_policy!r}")
        if self.packing is not None and self.packing.m != self.m:
            raise ValueError(f"packing has {self.packing.m} circles but m={self.m}")


@dataclass(frozen=True)
class Plan:
    scenario: Scenario
    homography: Homography
    packing: PackingConfig
    conics: tuple[Conic, ...]
    placements: tuple[UavPlacement, ...]
    quad_area: float
    footprint_area_sum: float
    coverage_fraction: float
    mapped_quad: Quadrilateral = field(repr=False)

    @property
    def footprints(self) -> list[EllipseFootprint]:
        return [p.footprint for p in self.placements]

    @property
    def quad(self) -> Quadrilateral:
        return self.scenario.quad


def _offset_sign(policy: str, e: EllipseFootprint, centroid) -> int:
    if policy == "positive":
        return 1
    if policy == "negative":
        return -1
    # +1 moves the projection along +major_axis; pick the side facing the centroid
    toward = float((np.asarray(centroid) - np.asarray(e.center)) @ e.major_axis)
    sign = 1 if toward >= 0 else -1
    return sign if policy == "toward-centroid" else -sign


def footprint_inside(q: Quadrilateral, e: EllipseFootprint, samples: int = BOUNDARY_SAMPLES) -> bool:
    return bool(geometry.contains_points(q, e.boundary(samples)).all())


def map_footprints(h: Homography, circles) -> tuple[list[Conic], list[EllipseFootprint]]:
    conics, feet = [], []
    for i, c in enumerate(circles, start=1):
        try:
            conic = map_circle(h, c)
            feet.append(extract_ellipse(conic, index=i))
        except QuadCoverError as exc:
            raise PlanningError(str(exc), uav=i, context={"circle": c}) from exc
        conics.append(conic)
    return conics, feet


def check_plan(plan: Plan) -> None:
    """Fail fast on the first footprint outside the packed region or overlapping pair."""
    region = plan.mapped_quad
    for p in plan.placements:
        if not footprint_inside(region, p.footprint):
            raise PlanningError(
                "footprint leaves the quadrilateral", uav=p.index,
                context={"footprint": p.footprint, "conic": plan.conics[p.index - 1].coeffs},
            )
    for p1, p2 in combinations(plan.placements, 2):
        rel = tangency_check(p1.footprint, p2.footprint)
        if rel is Relation.OVERLAPPING:
            raise PlanningError(f"footprint overlaps footprint {p2.index}", uav=p1.index)
    if not 0 < plan.coverage_fraction < 1:
        raise PlanningError(f"coverage fraction {plan.coverage_fraction} outside (0, 1)")


def plan(s: Scenario, check: bool = True) -> Plan:
    """Run the full pipeline; ``check=False`` skips the plan invariants."""
    packing = s.packing or get_packing(s.m)
    h = quad_to_quad(s.quad)
    if s.homography_decimals is not None:
        h = h.rounded(s.homography_decimals)
    conics, feet = map_footprints(h, packing.circles())
    centroid = s.quad.centroid
    placements = []
    for e in feet:
        try:
            placements.append(
                assemble_placement(s.env, e, s.f, _offset_sign(s.offset_policy, e, centroid))
            )
        except QuadCoverError as exc:
            raise PlanningError(
                str(exc), uav=e.index, context={"footprint": e, "conic": conics[e.index - 1].coeffs}
            ) from exc
    area = shoelace_area(s.quad)
    total = sum(ellipse_area(e) for e in feet)
    result = Plan(
        scenario=s,
        homography=h,
        packing=packing,
        conics=tuple(conics),
        placements=tuple(placements),
        quad_area=area,
        footprint_area_sum=total,
        coverage_fraction=total / area,
        mapped_quad=map_quad(h),
    )
    if check:
        check_plan(result)
    return result


def relation_report(plan: Plan):
    """Yield (i, j, circle_relation, ellipse_relation) for every index pair (1-based)."""
    expected = circle_relations(plan.packing)
    feet = plan.footprints
    for (i, j), rel in sorted(expected.items()):
        yield i + 1, j + 1, rel, tangency_check(feet[i], feet[j])


def coverage_fraction_mc(plan: Plan, samples: int = 1_000_000, seed: int = 42,
                         region: str = "mapped") -> float:
    """Monte Carlo estimate of the covered fraction of the scenario area.

    Points are drawn uniformly from ``region`` ("mapped": the image of the unit
    square, i.e. where the footprints were packed; "quad": the scenario
    quadrilateral). The hit rate is rescaled by area(region) / area(quad), so
    both regions estimate the same quantity when the footprints are contained.
    """
    rng = np.random.default_rng(seed)
    q = plan.mapped_quad if region == "mapped" else plan.quad
    hits = monte_carlo_hits(q, plan.footprints, samples, rng)
    return hits / samples * shoelace_area(q) / plan.quad_area


def monte_carlo_hits(q: Quadrilateral, footprints, samples: int, rng) -> int:
    v = q.as_array()
    lo, hi = v.min(axis=0), v.max(axis=0)
    hits = 0
    accepted = 0
    batch = 200_000
    while accepted < samples:
        pts = lo + rng.random((batch, 2)) * (hi - lo)
        pts = pts[geometry.contains_points(q, pts, tol=0.0)][: samples - accepted]
        accepted += len(pts)
        covered = np.zeros(len(pts), dtype=bool)
        for e in footprints:
            covered |= e.contains(pts)
        hits += int(covered.sum())
    return hits


def binomial_sigma(p: float, n: int) -> float:
    return math.sqrt(max(p * (1 - p), 0.0) / n)


def split_comparison(pieces, total_area: float, m: int = 4) -> float:
    """Fraction of ``total_area`` covered when each piece gets an m-circle packing.

    Each piece is a vertex list whose first two vertices receive the square's
    bottom edge.
    """
    packing = get_packing(m)
    covered = 0.0
    for piece in pieces:
        convexity_check(piece)
        h = quad_to_quad(piece)
        _, feet = map_footprints(h, packing.circles())
        covered += sum(ellipse_area(e) for e in feet)
    return covered / total_area


def hexagon_halves(side: float = 1.0, rotation: int = 0, reverse: bool = False):
    """The two trapezoids of a regular hexagon cut along a long diagonal.

    Each is listed starting at an end of its long side, counter-clockwise by
    default, so square bottom <-> long side. ``rotation`` (0..3) and
    ``reverse`` select the other vertex correspondences.
    """
    hexagon = [
        (side * math.cos(k * math.pi / 3), side * math.sin(k * math.pi / 3)) for k in range(6)
    ]
    lower = [hexagon[3], hexagon[4], hexagon[5], hexagon[0]]
    upper = [hexagon[0], hexagon[1], hexagon[2], hexagon[3]]
    out = []
    for half in (lower, upper):
        half = half[rotation:] + half[:rotation]
        if reverse:
            half = [half[0]] + half[:0:-1]
        out.append(half)
    return out, geometry.polygon_area(hexagon)


def hexagon_comparison(side: float = 1.0, rotation: int = 0, reverse: bool = False) -> float:
    halves, area = hexagon_halves(side, rotation, reverse)
    return split_comparison(halves, area, m=4)


def hexagon_alternatives(side: float = 1.0) -> dict[tuple[int, bool], float]:
    """Coverage for every cyclic/mirrored vertex correspondence of the trapezoids."""
    return {
        (rot, rev): hexagon_comparison(side, rot, rev) for rot in range(4) for rev in (False, True)
    }


def rectangle_comparison(u: float, v: float, n: int) -> float:
    rect = convexity_check([(0, 0), (u, 0), (u, v), (0, v)])
    h = quad_to_quad(rect)
    _, feet = map_footprints(h, grid_packing(n).circles())
    return sum(ellipse_area(e) for e in feet) / (u * v)
