"""Matplotlib rendering for verdict reports.

The CLI's report path writes these figures next to its delimited output.
Rendering is headless; figures go straight to files.
"""

from __future__ import annotations

import os
from typing import Callable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .truthtable import Enumerator

_LEVEL = {"true": 1, "false": 0, "timeout": -1}
_COLOR = {1: "#2f8f4e", 0: "#b03a3a", -1: "#8a8a8a"}


def verdict_figure(pairs: Sequence[tuple], title: str):
    """Strip chart of verdict strings over their inputs."""
    fig, ax = plt.subplots(figsize=(8.0, 2.8))
    xs = [x for x, _v in pairs]
    levels = [_LEVEL[v] for _x, v in pairs]
    ax.scatter(xs, levels, c=[_COLOR[lv] for lv in levels], s=22, zorder=3)
    ax.set_yticks([-1, 0, 1])
    ax.set_yticklabels(["timeout", "false", "true"])
    ax.set_ylim(-1.6, 1.6)
    ax.set_xlabel("input")
    ax.set_title(title)
    ax.grid(axis="x", alpha=0.25)
    fig.tight_layout()
    return fig


def enumerator_figure(e: Enumerator, upto: int, deficient: Callable[[int], bool] | None = None,
                      title: str = "enumerator"):
    """Scatter of enumerated values, deficiency-marked when known."""
    fig, ax = plt.subplots(figsize=(8.0, 3.2))
    xs = list(range(upto + 1))
    ys = [e.fn(n) for n in xs]
    flags = [bool(deficient(n)) if deficient else False for n in xs]
    plain = [(x, y) for x, y, f in zip(xs, ys, flags) if not f]
    marked = [(x, y) for x, y, f in zip(xs, ys, flags) if f]
    if plain:
        ax.scatter(*zip(*plain), s=18, color="#35618f", label="settled")
    if marked:
        ax.scatter(*zip(*marked), s=30, color="#c2611f", marker="x", label="deficient index")
    if marked or deficient:
        ax.legend(loc="upper left")
    ax.set_xlabel("index")
    ax.set_ylabel("value")
    ax.set_title(title)
    fig.tight_layout()
    return fig


def save_figure(fig, path: str) -> str:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    fig.savefig(path, dpi=110)
    plt.close(fig)
    return path
