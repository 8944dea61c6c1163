"""Command-line front end.

Exit codes: 0 success, 1 I/O error, 2 bad input, 3 planning failure,
4 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from pathlib import Path

from . import __version__
from .errors import (
    DegenerateConfiguration,
    GeometryError,
    InvalidPacking,
    PackingParseError,
    QuadCoverError,
    UnsupportedCount,
)
from .geometry import convexity_check
from .homography import quad_to_quad, vanishing_points
from .planner import OFFSET_POLICIES, plan
from .render import MODES, render_svg
from .scenario import ScenarioError, load_scenario
from .verify import run_checks, summary_line

EXIT_OK, EXIT_IO, EXIT_INPUT, EXIT_PLANNING, EXIT_VERIFY = 0, 1, 2, 3, 4

RECORD_FIELDS = (
    "uav_id", "center_x", "center_y", "a_m", "b_m", "phi_deg", "h_opt_m",
    "proj_x", "proj_y", "theta_deg", "psi_deg", "pl_max_db",
)
_INPUT_ERRORS = (
    ScenarioError, GeometryError, PackingParseError, InvalidPacking, UnsupportedCount,
    DegenerateConfiguration,
)


def placement_record(p) -> dict:
    e = p.footprint
    return {
        "uav_id": e.index,
        "center_x": e.center.x,
        "center_y": e.center.y,
        "a_m": e.a,
        "b_m": e.b,
        "phi_deg": math.degrees(e.phi),
        "h_opt_m": p.h_opt,
        "proj_x": p.proj.x,
        "proj_y": p.proj.y,
        "theta_deg": p.theta,
        "psi_deg": p.psi,
        "pl_max_db": p.pl_max_db,
    }


def plan_summary(result) -> dict:
    s = result.scenario
    return {
        "m": s.m,
        "environment": s.env.name,
        "frequency_hz": s.f,
        "quad_area_m2": result.quad_area,
        "footprint_area_sum_m2": result.footprint_area_sum,
        "coverage_fraction": result.coverage_fraction,
        "homography": [[float(v) for v in row] for row in result.homography.h],
        "homography_decimals": s.homography_decimals,
        "offset_policy": s.offset_policy,
    }


def _csv_value(field: str, v) -> str:
    if field == "uav_id":
        return str(v)
    if field.endswith("_deg"):
        return f"{v:.1f}"
    if field == "pl_max_db":
        return f"{v:.2f}"
    return f"{v:.3f}"


def format_csv(result) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RECORD_FIELDS)
    for p in result.placements:
        rec = placement_record(p)
        w.writerow([_csv_value(k, rec[k]) for k in RECORD_FIELDS])
    summary = plan_summary(result)
    buf.write(f"# quad_area_m2,{summary['quad_area_m2']:.3f}\n")
    buf.write(f"# footprint_area_sum_m2,{summary['footprint_area_sum_m2']:.3f}\n")
    buf.write(f"# coverage_fraction,{summary['coverage_fraction']:.6f}\n")
    buf.write(f"# environment,{summary['environment']}\n")
    buf.write(f"# frequency_hz,{summary['frequency_hz']:.6g}\n")
    buf.write("# homography," + ",".join(f"{v:.6g}" for row in summary["homography"] for v in row) + "\n")
    return buf.getvalue()


def format_json(result) -> str:
    doc = {
        "placements": [placement_record(p) for p in result.placements],
        "summary": plan_summary(result),
    }
    return json.dumps(doc, indent=2) + "\n"


def _write_atomic(path, text: str):
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _emit(text: str, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        _write_atomic(out, text)


def cmd_plan(args) -> int:
    s = load_scenario(args.scenario, offset_policy=args.offset_policy)
    result = plan(s)
    text = format_csv(result) if args.format == "csv" else format_json(result)
    _emit(text, args.out)
    if args.figures:
        from .figures import write_report_figures

        stem = Path(args.out).stem if args.out and args.out != "-" else "plan"
        for path in write_report_figures(result, args.figures, stem):
            print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK


def cmd_render(args) -> int:
    s = load_scenario(args.scenario, offset_policy=args.offset_policy)
    _write_atomic(args.out, render_svg(plan(s), args.mode))
    return EXIT_OK


def format_homography(h) -> str:
    lines = ["H ="]
    m = h.h
    # solver round-off on structurally zero entries would print as 1e-16 noise
    shown = [[0.0 if abs(v) < 1e-12 else float(v) for v in row] for row in m]
    for row in shown:
        lines.append("  " + "  ".join(f"{v: .6g}" for v in row))
    for label, vp in zip(("horizontal", "vertical"), vanishing_points(h)):
        where = "at infinity" if vp is None else f"({vp.x:.6g}, {vp.y:.6g})"
        lines.append(f"vanishing point ({label} lines): {where}")
    return "\n".join(lines) + "\n"


def cmd_homography(args) -> int:
    v = args.vertices
    pts = [(v[2 * i], v[2 * i + 1]) for i in range(4)]
    convexity_check(pts)
    # caller's order is kept: vertex i is the image of unit-square corner i
    h = quad_to_quad(pts)
    if args.decimals is not None:
        h = h.rounded(args.decimals)
    sys.stdout.write(format_homography(h))
    return EXIT_OK


def cmd_verify(args) -> int:
    # an invalid packing file must reach the checks, not be rejected at load
    s = load_scenario(args.scenario, offset_policy=args.offset_policy, validate_packing=False)
    result = plan(s, check=False)
    results = run_checks(result, samples=args.samples, seed=args.seed)
    lines = [r.line() for r in results] + [summary_line(results)]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadcover",
        description="Cover a convex quadrilateral with tangent elliptical UAV footprints.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def scenario_args(p):
        p.add_argument("--scenario", required=True, help="scenario JSON file")
        p.add_argument("--offset-policy", choices=OFFSET_POLICIES, default=None,
                       help="side of the footprint center the UAV is placed on")

    p = sub.add_parser("plan", help="compute placements and write CSV/JSON")
    scenario_args(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--figures", default=None, metavar="DIR",
                   help="also write PNG report figures into DIR")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("render", help="draw the plan as SVG")
    scenario_args(p)
    p.add_argument("--out", required=True, help="SVG file to write")
    p.add_argument("--mode", choices=MODES, default="footprints")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("homography", help="unit square -> quadrilateral homography")
    p.add_argument("vertices", nargs=8, type=float, metavar="X_OR_Y",
                   help="x1 y1 x2 y2 x3 y3 x4 y4, images of (0,0) (1,0) (1,1) (0,1)")
    p.add_argument("--decimals", type=int, default=None, help="round the normalized matrix")
    p.set_defaults(func=cmd_homography)

    p = sub.add_parser("verify", help="run the oracle checks on a plan")
    scenario_args(p)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", default=None, help="report file (default: stdout)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "samples", 10_000) < 10_000:
        print("error: --samples must be at least 10000", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except QuadCoverError as exc:
        print(f"planning error: {exc}", file=sys.stderr)
        return EXIT_PLANNING
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
