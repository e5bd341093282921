"""Figures for benchmark sweeps."""
from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bench import BenchRow  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "axes.titlesize": 11,
    "legend.fontsize": 8,
    "xtick.labelsize": 9,
    "ytick.labelsize": 9,
    "lines.linewidth": 1.4,
    "lines.markersize": 5,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "savefig.dpi": 150,
    # fixed metadata keeps repeated renders byte-stable
    "svg.hashsalt": "rslist",
}


def plot_bench(rows: Sequence[BenchRow], path: str | Path) -> Path:
    """Log-log multiplication counts against m (per n) and against n (per m)."""
    by_n: dict[int, list[BenchRow]] = defaultdict(list)
    by_m: dict[int, list[BenchRow]] = defaultdict(list)
    for r in rows:
        by_n[r.n].append(r)
        by_m[r.m].append(r)
    path = Path(path)
    with plt.rc_context(STYLE):
        fig, (ax_m, ax_n) = plt.subplots(1, 2, figsize=(8, 3.4))
        for n, rs in sorted(by_n.items()):
            rs = sorted(rs, key=lambda r: r.m)
            ax_m.loglog([r.m for r in rs], [r.mult_count for r in rs], "o-", label=f"n={n}")
        ax_m.set_xlabel("multiplicity m")
        ax_m.set_ylabel("field multiplications")
        ax_m.legend()
        for m, rs in sorted(by_m.items()):
            rs = sorted(rs, key=lambda r: r.n)
            ax_n.loglog([r.n for r in rs], [r.mult_count for r in rs], "s--", label=f"m={m}")
        ax_n.set_xlabel("code length n")
        ax_n.legend()
        fig.tight_layout()
        fig.savefig(path, metadata={"Software": None} if path.suffix == ".png" else None)
        plt.close(fig)
    return path
