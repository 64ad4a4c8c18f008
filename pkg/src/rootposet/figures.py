"""Matplotlib renderings of Hasse trees and of the count table."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .dynkin import LabeledGraph  # noqa: E402
from .rootsys import RootSystem  # noqa: E402

STYLE = {
    "font.family": "serif",
    "font.size": 9,
    "axes.titlesize": 10,
    "savefig.dpi": 150,
}


def _layout(g: LabeledGraph) -> dict[int, tuple[float, float]]:
    """Roots stacked by height, spread evenly within each height."""
    levels: dict[int, list[int]] = {}
    for i, p in enumerate(g.nodes):
        h = sum(p) if isinstance(p, tuple) else 0
        levels.setdefault(h, []).append(i)
    pos = {}
    for h, nodes in levels.items():
        k = len(nodes)
        for x, i in enumerate(nodes):
            pos[i] = (x - (k - 1) / 2, h)
    return pos


def draw_tree(rs: RootSystem, g: LabeledGraph, path: str | Path, title: str | None = None) -> Path:
    """Long roots hollow, short roots filled; edges carry display-numbered simple roots."""
    path = Path(path)
    pos = _layout(g)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4, 0.6 * (1 + len(set(y for _, y in pos.values())))))
        for (i, j), lab in sorted(g.edges.items()):
            (x0, y0), (x1, y1) = pos[i], pos[j]
            ax.plot([x0, x1], [y0, y1], color="k", lw=1 + 1.5 * (g.bonds.get((i, j), 1) - 1), zorder=1)
            if lab is not None:
                ax.annotate(str(rs.display_index(lab)), ((x0 + x1) / 2, (y0 + y1) / 2),
                            xytext=(4, 0), textcoords="offset points", color="tab:blue",
                            fontsize=8, va="center")
        for i, (x, y) in pos.items():
            short = i in g.short
            ax.scatter([x], [y], s=60, zorder=2, edgecolors="k",
                       facecolors="k" if short else "w", linewidths=1)
            ax.annotate(g.node_name(rs, i), (x, y), xytext=(-8, 0), textcoords="offset points",
                        ha="right", va="center", fontsize=8)
        ax.set_axis_off()
        ax.margins(0.35, 0.2)
        if title:
            ax.set_title(title)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_counts(rows: list[dict], path: str | Path) -> Path:
    """#Gamma and #Gamma_H against rank for each classical family."""
    path = Path(path)
    with plt.rc_context(STYLE):
        fig, axes = plt.subplots(1, 2, figsize=(7, 2.8), sharex=True)
        for key, ax, label in (("gamma", axes[0], "#amazing"), ("gamma_H", axes[1], "#amazing in H")):
            for fam, marker in zip("ABCD", "osD^"):
                pts = sorted((r["rank"], r[key]) for r in rows if r["family"] == fam)
                if pts:
                    xs, ys = zip(*pts)
                    ax.plot(xs, ys, marker=marker, ms=4, lw=1, label=fam)
            ex = [(r["rank"], r[key], r["type"]) for r in rows if r["family"] in "EFG"]
            for x, y, name in ex:
                ax.scatter([x], [y], marker="*", color="k", s=30, zorder=3)
                ax.annotate(name, (x, y), xytext=(3, 3), textcoords="offset points", fontsize=7)
            ax.set_xlabel("rank")
            ax.set_ylabel(label)
            ax.grid(alpha=0.3)
        axes[0].legend(frameon=False, fontsize=7)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path
