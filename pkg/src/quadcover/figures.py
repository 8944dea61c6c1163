"""Matplotlib report figures written next to the tabular plan output."""
from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Ellipse, Polygon  # noqa: E402

from .channel import PRESETS  # noqa: E402
from .placement import optimize_altitude  # noqa: E402

# fixed metadata keeps PNG bytes stable between runs
_SAVE = {"dpi": 120, "metadata": {"Software": None}}


def _bar(ax, values, ylabel, color):
    idx = range(1, len(values) + 1)
    ax.bar(idx, values, color=color, edgecolor="black", linewidth=0.6)
    ax.set_xticks(list(idx))
    ax.set_xlabel("UAV")
    ax.set_ylabel(ylabel)
    ax.grid(axis="y", alpha=0.3)


def altitude_pathloss_figure(plan, environments=None):
    """H_opt and PL_max per UAV, one column per environment.

    The plan's footprints are re-optimized for every environment; the plan's
    own environment is always included.
    """
    envs = dict(environments or PRESETS)
    envs.setdefault(plan.scenario.env.name, plan.scenario.env)
    fig, axes = plt.subplots(2, len(envs), figsize=(3.2 * len(envs), 5.5), squeeze=False)
    f = plan.scenario.f
    for col, (name, env) in enumerate(envs.items()):
        hs, pls = [], []
        for e in plan.footprints:
            h, pl = optimize_altitude(env, e.a, e.b, f)
            hs.append(h)
            pls.append(pl)
        _bar(axes[0, col], hs, r"$H_\mathrm{opt}$ (m)", "#4c72b0")
        _bar(axes[1, col], pls, r"$PL_\mathrm{max}$ (dB)", "#c44e52")
        axes[0, col].set_title(name.replace("_", " "))
        lo = min(pls)
        axes[1, col].set_ylim(math.floor(lo - 5), math.ceil(max(pls) + 2))
    fig.tight_layout()
    return fig


def footprint_figure(plan):
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.add_patch(Polygon(plan.quad.as_array(), closed=True, fill=False, lw=1.5))
    for p in plan.placements:
        e = p.footprint
        ax.add_patch(
            Ellipse(e.center, 2 * e.a, 2 * e.b, angle=math.degrees(e.phi), alpha=0.3,
                    facecolor="#4c72b0", edgecolor="#1f3a68")
        )
        ax.annotate(str(e.index), e.center, ha="center", va="center")
        ax.plot(*p.proj, "o", color="#c44e52", ms=3)
    v = plan.quad.as_array()
    pad = 0.05 * plan.quad.bbox_diagonal
    ax.set_xlim(v[:, 0].min() - pad, v[:, 0].max() + pad)
    ax.set_ylim(v[:, 1].min() - pad, v[:, 1].max() + pad)
    ax.set_aspect("equal")
    ax.set_xlabel("x (m)")
    ax.set_ylabel("y (m)")
    fig.tight_layout()
    return fig


def write_report_figures(plan, out_dir, stem: str = "plan") -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, make in (("footprints", footprint_figure), ("altitude_pathloss", altitude_pathloss_figure)):
        fig = make(plan)
        path = out_dir / f"{stem}_{name}.png"
        fig.savefig(path, **_SAVE)
        plt.close(fig)
        written.append(path)
    return written
