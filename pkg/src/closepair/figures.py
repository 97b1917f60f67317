"""Render benchmark ratio tables as figures.

Kept separate from the benchmark module, which emits data files only;
this is the CLI's optional report-rendering path.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence, Union

from .bench import RatioRow

__all__ = ["render_ratio_figure"]


def render_ratio_figure(
    rows: Sequence[RatioRow],
    path: Union[str, Path],
    title: str = "Closest-pair combine variants: basic2 / basic7 median time ratio",
) -> Path:
    """Plot time ratio against input size, one line per metric, to ``path``.

    The output format follows the file extension (png, pdf, svg, ...).
    Returns the written path.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out = Path(path)
    by_metric: dict[float, list[RatioRow]] = {}
    labels: dict[float, str] = {}
    for row in rows:
        by_metric.setdefault(row.metric.p, []).append(row)
        labels[row.metric.p] = str(row.metric)

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for p in sorted(by_metric):
        series = sorted(by_metric[p], key=lambda r: r.n)
        ax.plot(
            [r.n for r in series],
            [r.time_ratio for r in series],
            marker="o",
            label=f"p = {labels[p]}",
        )
    ax.axhline(1.0, color="grey", linestyle="--", linewidth=1)
    ax.set_xscale("log", base=2)
    ax.set_xlabel("input size n")
    ax.set_ylabel("median wall-time ratio (basic2 / basic7)")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.savefig(out, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return out
