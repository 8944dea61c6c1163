"""Oracle checks over a finished plan (used by ``quadcover verify``)."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .conic import Relation
from .geometry import edge_margins, shoelace_area
from .oracles import cone_footprint
from .placement import cone_consistency_error
from .planner import (
    Plan,
    binomial_sigma,
    coverage_fraction_mc,
    footprint_inside,
    relation_report,
)

CONE_TOL = 1e-6


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def check_containment(plan: Plan) -> CheckResult:
    outside = [p.index for p in plan.placements if not footprint_inside(plan.mapped_quad, p.footprint)]
    # how far the footprints reach past the requested quadrilateral (0 when exact)
    worst = min(float(edge_margins(plan.quad, e.boundary(256)).min()) for e in plan.footprints)
    detail = f"{len(plan.placements) - len(outside)}/{len(plan.placements)} inside packed region"
    detail += f", max protrusion past quad {max(0.0, -worst):.6g} m"
    if outside:
        detail += f", outside: {outside}"
    return CheckResult("containment", not outside, detail)


def check_tangency(plan: Plan) -> CheckResult:
    bad = []
    counts = {r: 0 for r in Relation}
    for i, j, expected, got in relation_report(plan):
        counts[got] += 1
        if got is not expected or got is Relation.OVERLAPPING:
            bad.append(f"{i}-{j} {expected.value}->{got.value}")
    detail = ", ".join(f"{counts[r]} {r.value}" for r in Relation)
    if bad:
        detail += "; mismatched/overlapping: " + ", ".join(bad)
    return CheckResult("tangency", not bad, detail)


def check_coverage_mc(plan: Plan, samples: int, seed: int) -> CheckResult:
    mc = coverage_fraction_mc(plan, samples, seed)
    # the estimator is a hit rate rescaled by area(region)/area(quad)
    ratio = shoelace_area(plan.mapped_quad) / plan.quad_area
    sigma = binomial_sigma(mc / ratio, samples) * ratio
    diff = abs(mc - plan.coverage_fraction)
    ok = diff <= 3 * sigma
    detail = (
        f"analytic {plan.coverage_fraction:.6f}, monte carlo {mc:.6f} "
        f"(n={samples}, seed={seed}), |diff| {diff:.2e} vs 3 sigma {3 * sigma:.2e}"
    )
    return CheckResult("coverage_mc", ok, detail)


def check_cone(plan: Plan) -> CheckResult:
    worst = 0.0
    for p in plan.placements:
        worst = max(worst, cone_consistency_error(p))
        e = p.footprint
        a, b, d, _ = cone_footprint(p.h_opt, p.psi, p.theta)
        worst = max(worst, abs(a - e.a) / e.a, abs(b - e.b) / e.b, abs(d - p.offset) / e.a)
    return CheckResult("cone_geometry", worst <= CONE_TOL, f"max relative error {worst:.2e}")


def run_checks(plan: Plan, samples: int = 1_000_000, seed: int = 42) -> list[CheckResult]:
    return [
        check_containment(plan),
        check_tangency(plan),
        check_coverage_mc(plan, samples, seed),
        check_cone(plan),
    ]


def summary_line(results) -> str:
    failed = [r.name for r in results if not r.passed]
    status = "FAIL" if failed else "PASS"
    line = f"verify: {status} {len(results) - len(failed)}/{len(results)} passed"
    if failed:
        line += " failed=" + ",".join(failed)
    return line
