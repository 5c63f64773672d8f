"""Figures for report bundles: Cayley tables and the ideal lattice."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .subsets import format_subset  # noqa: E402

FLAG_COLORS = [
    ("ultra", "#2a9d8f"),
    ("maximal", "#e9c46a"),
    ("prime", "#8ab17d"),
    ("proper", "#a8dadc"),
]
IMPROPER_COLOR = "#d9d9d9"


def plot_cayley_tables(alg, path):
    """Side-by-side heat maps of -> and *, cells labelled by element name."""
    fig, axes = plt.subplots(1, 2, figsize=(2.0 + 1.1 * alg.n, 1.2 + 0.6 * alg.n))
    for ax, table, symbol in ((axes[0], alg.imp, "->"), (axes[1], alg.otimes, "*")):
        ax.imshow(table, cmap="Blues", vmin=0, vmax=max(alg.n - 1, 1))
        for x, row in enumerate(table):
            for y, v in enumerate(row):
                ax.text(y, x, alg.elements[v], ha="center", va="center",
                        color="white" if v > (alg.n - 1) / 2 else "black")
        ax.set_xticks(range(alg.n), alg.elements)
        ax.set_yticks(range(alg.n), alg.elements)
        ax.set_title(f"x {symbol} y")
        ax.set_xlabel("y")
        ax.set_ylabel("x")
    fig.suptitle(f"{alg.name}: {alg.klass.label}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _node_color(c):
    if c is None:
        return IMPROPER_COLOR
    for flag, color in FLAG_COLORS:
        if getattr(c, "is_" + flag):
            return color
    return IMPROPER_COLOR


def plot_ideal_lattice(alg, inv, path):
    """Hasse diagram of the LI-ideals under inclusion, levelled by size."""
    levels = {}
    for i, (A, _) in enumerate(inv.entries):
        levels.setdefault(len(A), []).append(i)
    pos = {}
    for size, idx in levels.items():
        for k, i in enumerate(idx):
            pos[i] = (k - (len(idx) - 1) / 2, size)

    fig, ax = plt.subplots(figsize=(max(4, 1.8 * max(len(v) for v in levels.values())), 1.5 + 0.9 * len(levels)))
    for i, j in inv.edges:
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="#555555", lw=1, zorder=1)
    for i, (A, c) in enumerate(inv.entries):
        x, y = pos[i]
        ax.text(x, y, format_subset(alg, A), ha="center", va="center", zorder=2,
                bbox=dict(boxstyle="round", fc=_node_color(c), ec="#333333"))
    handles = [plt.Line2D([], [], marker="s", ls="", color=col, label=f) for f, col in FLAG_COLORS]
    handles.append(plt.Line2D([], [], marker="s", ls="", color=IMPROPER_COLOR, label="improper"))
    ax.legend(handles=handles, loc="upper left", fontsize=8, frameon=False)
    xs = [p[0] for p in pos.values()] or [0]
    ys = [p[1] for p in pos.values()] or [0]
    ax.set_xlim(min(xs) - 1.2, max(xs) + 1.2)
    ax.set_ylim(min(ys) - 0.7, max(ys) + 0.7)
    ax.set_ylabel("|A|")
    ax.set_xticks([])
    ax.set_yticks(sorted(levels))
    for side in ("top", "right", "bottom"):
        ax.spines[side].set_visible(False)
    ax.set_title(f"LI-ideals of {alg.name}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_suite_summary(alg, results, path):
    """One bar per suite: instances checked, counterexamples stacked in red."""
    ids = [r.suite_id for r in results]
    ok = [len(r.instances) - len(r.counterexamples) for r in results]
    bad = [len(r.counterexamples) for r in results]
    fig, ax = plt.subplots(figsize=(1.0 + 0.55 * len(ids), 3.2))
    ax.bar(ids, ok, color="#8ab17d", label="clause pattern holds")
    ax.bar(ids, bad, bottom=ok, color="#e76f51", label="counterexample")
    ax.set_ylabel("instances")
    ax.set_title(f"theorem suites on {alg.name}")
    ax.tick_params(axis="x", rotation=60)
    ax.legend(fontsize=8, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
