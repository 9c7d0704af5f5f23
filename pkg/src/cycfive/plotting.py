"""Static drawings of graphs, cuts and completions for visual inspection."""
from __future__ import annotations

from typing import Iterable, Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

from .graph import CubicGraph  # noqa: E402

PALETTE = {
    "plain": "#d9d9d9",
    "boundary": "#4c72b0",
    "added": "#dd8452",
    "side": "#55a868",
    "cut": "#c44e52",
}


def figure_settings(width: float = 6.0, height: Optional[float] = None):
    height = height or width
    fig, ax = plt.subplots(figsize=(width, height), facecolor="w")
    ax.set_axis_off()
    return fig, ax


def layout(g: CubicGraph) -> dict:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(e.ends for e in g.edges if not e.is_loop())
    if g.n <= 2:
        return nx.circular_layout(G)
    return nx.kamada_kawai_layout(G)


def draw_graph(
    g: CubicGraph,
    path: str,
    title: str = "",
    boundary: Iterable[int] = (),
    added: Iterable[int] = (),
    side: Iterable[int] = (),
    cut: Iterable[tuple[int, int]] = (),
) -> str:
    """Render ``g`` to ``path``; the format follows the file extension.

    ``boundary`` and ``added`` vertices get their own colours, ``side``
    marks one side of a cut, and ``cut`` edges are drawn dashed.
    """
    boundary, added, side = set(boundary), set(added), set(side)
    cut = {tuple(sorted(p)) for p in cut}
    pos = layout(g)
    fig, ax = figure_settings()

    for e in g.edges:
        (x0, y0), (x1, y1) = pos[e.u], pos[e.v]
        if e.is_loop():
            ax.add_patch(plt.Circle((x0, y0 + 0.05), 0.05, fill=False, lw=1.2, color="k"))
            continue
        bend = 0.08 * e.slot
        style = dict(color=PALETTE["cut"], ls="--", lw=2) if e.ends in cut else dict(color="k", lw=1.2)
        if bend:
            xm, ym = (x0 + x1) / 2 - bend * (y1 - y0), (y0 + y1) / 2 + bend * (x1 - x0)
            ax.plot([x0, xm, x1], [y0, ym, y1], **style)
        else:
            ax.plot([x0, x1], [y0, y1], **style)

    for v in range(g.n):
        if v in added:
            c = PALETTE["added"]
        elif v in boundary:
            c = PALETTE["boundary"]
        elif v in side:
            c = PALETTE["side"]
        else:
            c = PALETTE["plain"]
        ax.scatter(*pos[v], s=260, c=c, edgecolors="k", zorder=3)
        ax.text(*pos[v], str(v), ha="center", va="center", fontsize=8, zorder=4)

    if title:
        ax.set_title(title, fontsize=11)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None} if path.endswith(".png") else None)
    plt.close(fig)
    return path
