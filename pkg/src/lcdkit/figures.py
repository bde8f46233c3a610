"""Optional figure rendering for tables and claim reports.

Figures are a side output: they never replace or alter the delimited
records, and nothing else in the package imports this module.  The Agg
backend is forced so rendering works headless.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .bounds import plotkin_average_bound, singleton_bound, stated_upper_bound
from .claims import VERDICT_CONFIRMED, VERDICT_OUT_OF_BUDGET, VERDICT_REFUTED
from .search import LcdTableEntry

_VERDICT_COLORS = {
    VERDICT_CONFIRMED: "#2a7e43",
    VERDICT_REFUTED: "#b2412f",
    VERDICT_OUT_OF_BUDGET: "#8a8a8a",
}


def save_table_figures(table, out_dir: str) -> list[str]:
    """One d-versus-n plot per (q, k) group, with bound overlays.

    Returns the paths written, in deterministic group order.
    """
    os.makedirs(out_dir, exist_ok=True)
    groups: dict[tuple[int, int], list[LcdTableEntry]] = {}
    for entry in table:
        if isinstance(entry, LcdTableEntry):
            groups.setdefault((entry.q, entry.k), []).append(entry)
    paths = []
    for (q, k), cells in sorted(groups.items()):
        cells.sort(key=lambda e: e.n)
        ns = [e.n for e in cells]
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        for method, marker, fill in (("exhaustive", "o", "full"),
                                     ("random", "s", "none")):
            pts = [(e.n, e.d_lcd) for e in cells if e.method == method]
            if pts:
                ax.plot(*zip(*pts), marker=marker, fillstyle=fill,
                        linestyle="-" if method == "exhaustive" else "",
                        label=f"{method} d_lcd")
        span = range(min(ns), max(ns) + 1)
        ax.plot(span, [plotkin_average_bound(n, k, q) for n in span],
                "--", linewidth=1, label="average-weight bound")
        ax.plot(span, [singleton_bound(n, k) for n in span],
                ":", linewidth=1, label="singleton bound")
        ax.plot(span, [stated_upper_bound(n, k, q) for n in span],
                "-.", linewidth=1, label="stated bound (under test)")
        ax.set_xlabel("length n")
        ax.set_ylabel("max LCD distance")
        ax.set_title(f"LCD[n,{k}] over GF({q})")
        ax.legend(fontsize=8)
        ax.grid(alpha=0.3)
        path = os.path.join(out_dir, f"table_k{k}_q{q}.png")
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
        paths.append(path)
    return paths


def save_verify_figure(report, out_dir: str) -> str:
    """Horizontal bar per claim, colored by verdict."""
    os.makedirs(out_dir, exist_ok=True)
    ids = [r.claim.claim_id for r in report.results]
    counts = [len(r.points) for r in report.results]
    colors = [_VERDICT_COLORS[r.verdict] for r in report.results]
    fig, ax = plt.subplots(figsize=(6.4, 0.42 * len(ids) + 1.2))
    ax.barh(range(len(ids)), counts, color=colors)
    ax.set_yticks(range(len(ids)))
    ax.set_yticklabels(ids, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("parameter points evaluated")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in _VERDICT_COLORS.values()]
    ax.legend(handles, list(_VERDICT_COLORS), fontsize=8, loc="lower right")
    ax.set_title(f"claim verdicts (seed {report.seed})")
    path = os.path.join(out_dir, "verify_verdicts.png")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path
