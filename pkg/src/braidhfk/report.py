"""File reports for a homology run: delimited rank table plus a chart.

The CSV carries one row per bigraded group; the figure plots the ranks on
the (Alexander, Maslov) plane so staircase shapes are visible at a glance.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .homology import euler_characteristic  # noqa: E402


def write_report(poly, outdir):
    """Write hfk_ranks.csv and hfk_ranks.png; returns the file paths."""
    os.makedirs(outdir, exist_ok=True)
    rows = poly.sorted_entries()

    csv_path = os.path.join(outdir, "hfk_ranks.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["alexander", "maslov", "rank"])
        for (m, s), r in rows:
            writer.writerow([s, m, r])

    fig_path = os.path.join(outdir, "hfk_ranks.png")
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    if rows:
        ss = [s for (m, s), _ in rows]
        ms = [m for (m, s), _ in rows]
        ax.scatter(ss, ms, s=120, color="tab:blue", zorder=3)
        for (m, s), r in rows:
            ax.annotate(str(r), (s, m), textcoords="offset points",
                        xytext=(8, 6))
        pad = 1
        ax.set_xticks(range(min(ss) - pad, max(ss) + pad + 1))
        ax.set_yticks(range(min(ms) - pad, max(ms) + pad + 1))
    ax.grid(True, linewidth=0.3, zorder=0)
    ax.set_xlabel("Alexander grading")
    ax.set_ylabel("Maslov grading")
    title = poly.knot_name or "knot"
    ax.set_title(f"{title}   chi = {euler_characteristic(poly)}")
    fig.tight_layout()
    fig.savefig(fig_path, dpi=120)
    plt.close(fig)

    return [csv_path, fig_path]
