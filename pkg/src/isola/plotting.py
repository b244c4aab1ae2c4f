"""PNG figures: law runtimes and Hasse diagrams.

matplotlib runs on the Agg backend, so nothing here needs a display.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Callable, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

from .poset import FinitePoset  # noqa: E402

__all__ = ["runtime_chart", "hasse_png"]

_COLOURS = {"pass": "#4c8c4a", "fail": "#c0392b", "error": "#7f3c8d"}


def runtime_chart(results: Sequence[Any], path: str | Path, title: str = "law runtimes") -> Path:
    """Horizontal bar chart of ``runtime`` per law, coloured by verdict."""
    path = Path(path)
    rows = list(results)
    fig, ax = plt.subplots(figsize=(8, max(2.5, 0.22 * len(rows) + 1)))
    ys = range(len(rows))
    ax.barh(list(ys), [r.runtime for r in rows], color=[_COLOURS.get(r.verdict, "grey") for r in rows])
    ax.set_yticks(list(ys), [r.id for r in rows], fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _heights(p: FinitePoset) -> list[int]:
    """Length of the longest chain ending at each element."""
    g = nx.DiGraph(p.covers())
    g.add_nodes_from(range(len(p)))
    h = [0] * len(p)
    for v in nx.topological_sort(g):
        for w in g.successors(v):
            h[w] = max(h[w], h[v] + 1)
    return h


def hasse_png(p: FinitePoset, path: str | Path, label: Callable[[Any], str] = str, title: str | None = None) -> Path:
    """Draw the cover relation with minimal elements at the bottom."""
    path = Path(path)
    g = nx.DiGraph(p.covers())
    g.add_nodes_from(range(len(p)))
    heights = _heights(p)
    for v in g.nodes:
        g.nodes[v]["layer"] = heights[v]
    pos = nx.multipartite_layout(g, subset_key="layer", align="horizontal") if len(p) else {}
    fig, ax = plt.subplots(figsize=(max(4, 0.9 * max([heights.count(h) for h in set(heights)] or [1])), 1.2 * (max(heights, default=0) + 2)))
    nx.draw_networkx_edges(g, pos, ax=ax, arrows=False, edge_color="#888888")
    nx.draw_networkx_nodes(g, pos, ax=ax, node_size=220, node_color="#dbe8f5")
    nx.draw_networkx_labels(g, pos, {i: label(x) for i, x in enumerate(p.elements)}, ax=ax, font_size=7)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
