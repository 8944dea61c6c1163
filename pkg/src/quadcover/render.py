"""Static SVG 1.1 figures of a plan.

World coordinates (meters, y up) are drawn inside a group whose transform
flips y for the screen; labels are placed outside that group so text is not
mirrored.
"""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

from .planner import Plan

MODES = ("footprints", "packing_pair", "pose3d")
WIDTH = 800.0
MARGIN = 30.0


def _g(v: float) -> str:
    return f"{v:.6g}"


class _Canvas:
    def __init__(self, width, height):
        self.width, self.height = width, height
        self.parts: list[str] = []

    def add(self, s: str):
        self.parts.append(s)

    def text(self, x, y, label, size=12, anchor="middle"):
        self.add(
            f'<text x="{_g(x)}" y="{_g(y)}" font-family="sans-serif" font-size="{size}" '
            f'text-anchor="{anchor}" dominant-baseline="central">{escape(str(label))}</text>'
        )

    def render(self) -> str:
        head = (
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_g(self.width)}" height="{_g(self.height)}" '
            f'viewBox="0 0 {_g(self.width)} {_g(self.height)}">\n'
            '<rect x="0" y="0" width="100%" height="100%" fill="white"/>\n'
        )
        return head + "\n".join(self.parts) + "\n</svg>\n"


class _View:
    """Maps a world box onto a screen box with y flipped."""

    def __init__(self, lo, hi, x0, y0, w, h):
        span = np.maximum(np.asarray(hi) - np.asarray(lo), 1e-12)
        self.s = min(w / span[0], h / span[1])
        self.lo = np.asarray(lo, dtype=float)
        # center the content inside the box
        self.tx = x0 + (w - self.s * span[0]) / 2 - self.s * self.lo[0]
        self.ty = y0 + (h + self.s * span[1]) / 2 + self.s * self.lo[1]

    def transform(self) -> str:
        return f"matrix({_g(self.s)} 0 0 {_g(-self.s)} {_g(self.tx)} {_g(self.ty)})"

    def __call__(self, x, y):
        return self.tx + self.s * x, self.ty - self.s * y

    @property
    def stroke(self) -> float:
        """One screen pixel in world units."""
        return 1.0 / self.s


def _world_box(points):
    pts = np.asarray(points, dtype=float)
    return pts.min(axis=0), pts.max(axis=0)


def _polygon(points, **style) -> str:
    pts = " ".join(f"{_g(x)},{_g(y)}" for x, y in points)
    attrs = " ".join(f'{k.replace("_", "-")}="{v}"' for k, v in style.items())
    return f'<polygon points="{pts}" {attrs}/>'


def _ellipse(e, stroke_w, fill="#4c72b0", opacity="0.25") -> str:
    cx, cy = e.center
    return (
        f'<ellipse id="footprint-{e.index}" cx="{_g(cx)}" cy="{_g(cy)}" rx="{_g(e.a)}" ry="{_g(e.b)}" '
        f'transform="rotate({_g(math.degrees(e.phi))} {_g(cx)} {_g(cy)})" '
        f'fill="{fill}" fill-opacity="{opacity}" stroke="#1f3a68" stroke-width="{_g(stroke_w)}"/>'
    )


def _draw_plan_panel(canvas: _Canvas, plan: Plan, x0, y0, w, h):
    feet = plan.footprints
    pts = [*plan.quad.vertices, *plan.mapped_quad.vertices]
    for e in feet:
        pts.extend(e.boundary(64))
    pts.extend(p.proj for p in plan.placements)
    view = _View(*_world_box(pts), x0, y0, w, h)
    sw = view.stroke
    canvas.add(f"<!-- world-to-view: x_view = {_g(view.s)}*x + {_g(view.tx)}, "
               f"y_view = {_g(-view.s)}*y + {_g(view.ty)} -->")
    canvas.add(f'<g id="world" transform="{view.transform()}">')
    canvas.add(_polygon(plan.quad.vertices, id="quad", fill="none", stroke="black",
                        stroke_width=_g(2 * sw)))
    drift = np.abs(plan.mapped_quad.as_array() - plan.quad.as_array()).max()
    if drift > 1e-6 * plan.quad.bbox_diagonal:
        # a rounded homography packs a slightly different quad; show it
        canvas.add(_polygon(plan.mapped_quad.vertices, id="packed-region", fill="none",
                            stroke="gray", stroke_width=_g(sw),
                            stroke_dasharray=f"{_g(6 * sw)},{_g(4 * sw)}"))
    for e in feet:
        canvas.add(_ellipse(e, sw))
    for p in plan.placements:
        canvas.add(
            f'<circle id="uav-proj-{p.index}" cx="{_g(p.proj.x)}" cy="{_g(p.proj.y)}" '
            f'r="{_g(3 * sw)}" fill="#c44e52"/>'
        )
        canvas.add(
            f'<line x1="{_g(p.proj.x)}" y1="{_g(p.proj.y)}" x2="{_g(p.footprint.center.x)}" '
            f'y2="{_g(p.footprint.center.y)}" stroke="#c44e52" stroke-width="{_g(sw)}" '
            f'stroke-dasharray="{_g(4 * sw)},{_g(3 * sw)}"/>'
        )
    canvas.add("</g>")
    for e in feet:
        canvas.text(*view(*e.center), e.index)


def _draw_packing_panel(canvas: _Canvas, plan: Plan, x0, y0, w, h):
    view = _View((0, 0), (1, 1), x0, y0, w, h)
    sw = view.stroke
    canvas.add(f'<g id="unit-square" transform="{view.transform()}">')
    canvas.add(_polygon([(0, 0), (1, 0), (1, 1), (0, 1)], fill="none", stroke="black",
                        stroke_width=_g(2 * sw)))
    r = plan.packing.radius
    for i, (x, y) in enumerate(plan.packing.centers, start=1):
        canvas.add(
            f'<circle id="circle-{i}" cx="{_g(x)}" cy="{_g(y)}" r="{_g(r)}" fill="#55a868" '
            f'fill-opacity="0.25" stroke="#2d5e38" stroke-width="{_g(sw)}"/>'
        )
    canvas.add("</g>")
    for i, c in enumerate(plan.packing.centers, start=1):
        canvas.text(*view(*c), i)


def _iso(x, y, z, zscale):
    c, s = math.cos(math.radians(30)), math.sin(math.radians(30))
    return (x - y) * c, (x + y) * s + z * zscale


def _draw_pose3d(canvas: _Canvas, plan: Plan, x0, y0, w, h, zscale=1.0):
    rings = [np.asarray(e.boundary(64)) for e in plan.footprints]
    world = [_iso(x, y, 0, zscale) for x, y in plan.quad.vertices]
    for ring in rings:
        world.extend(_iso(x, y, 0, zscale) for x, y in ring)
    world.extend(_iso(*p.position, zscale) for p in plan.placements)
    view = _View(*_world_box(world), x0, y0, w, h)
    sw = view.stroke
    canvas.add("<!-- isometric view: X = (x - y) cos30, Y = (x + y) sin30 + z -->")
    canvas.add(
        '<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="7" refY="4" '
        'orient="auto" markerUnits="userSpaceOnUse"><path d="M0,0 L8,4 L0,8 z" fill="#c44e52"/>'
        "</marker></defs>"
    )
    canvas.add(f'<g id="iso" transform="{view.transform()}">')
    canvas.add(_polygon([_iso(x, y, 0, zscale) for x, y in plan.quad.vertices],
                        fill="#eeeeee", stroke="black", stroke_width=_g(2 * sw)))
    for ring, e in zip(rings, plan.footprints):
        canvas.add(_polygon([_iso(x, y, 0, zscale) for x, y in ring], id=f"footprint-{e.index}",
                            fill="#4c72b0", fill_opacity="0.25", stroke="#1f3a68",
                            stroke_width=_g(sw)))
    for p in plan.placements:
        ux, uy = _iso(*p.position, zscale)
        gx, gy = _iso(p.proj.x, p.proj.y, 0, zscale)
        # boresight ground hit, h*tan(psi) from the projection toward the footprint
        toward = np.asarray(p.footprint.center) - np.asarray(p.proj)
        n = np.linalg.norm(toward)
        u = toward / n if n > 0 else np.zeros(2)
        bx, by = np.asarray(p.proj) + u * p.h_opt * math.tan(math.radians(p.psi))
        tx, ty = _iso(bx, by, 0, zscale)
        canvas.add(f'<line x1="{_g(ux)}" y1="{_g(uy)}" x2="{_g(gx)}" y2="{_g(gy)}" stroke="gray" '
                   f'stroke-width="{_g(sw)}" stroke-dasharray="{_g(4 * sw)},{_g(3 * sw)}"/>')
        canvas.add(f'<line id="tilt-{p.index}" x1="{_g(ux)}" y1="{_g(uy)}" x2="{_g(tx)}" y2="{_g(ty)}" '
                   f'stroke="#c44e52" stroke-width="{_g(1.5 * sw)}" marker-end="url(#arrow)"/>')
        canvas.add(f'<circle id="uav-{p.index}" cx="{_g(ux)}" cy="{_g(uy)}" r="{_g(4 * sw)}" fill="#c44e52"/>')
    canvas.add("</g>")
    for p in plan.placements:
        vx, vy = view(*_iso(*p.position, zscale))
        canvas.text(vx + 10, vy - 10, f"{p.index} ({p.h_opt:.0f} m)", size=11, anchor="start")


def render_svg(plan: Plan, mode: str = "footprints") -> str:
    if mode not in MODES:
        raise ValueError(f"unknown render mode {mode!r}; expected one of {MODES}")
    if mode == "footprints":
        canvas = _Canvas(WIDTH, WIDTH * 0.6)
        _draw_plan_panel(canvas, plan, MARGIN, MARGIN, WIDTH - 2 * MARGIN, WIDTH * 0.6 - 2 * MARGIN)
    elif mode == "packing_pair":
        height = WIDTH * 0.45
        canvas = _Canvas(WIDTH, height)
        side = height - 2 * MARGIN
        _draw_packing_panel(canvas, plan, MARGIN, MARGIN, side, side)
        _draw_plan_panel(canvas, plan, 2 * MARGIN + side, MARGIN, WIDTH - 3 * MARGIN - side, side)
    else:
        canvas = _Canvas(WIDTH, WIDTH * 0.75)
        _draw_pose3d(canvas, plan, MARGIN, MARGIN, WIDTH - 2 * MARGIN, WIDTH * 0.75 - 2 * MARGIN)
    return canvas.render()
