"""File output for suite reports: a CSV table and a rendered figure.

The figure dependency is imported lazily so that every other entry
point works without a drawing backend.
"""
from __future__ import annotations

import csv
from pathlib import Path

from .suite import SuiteReport


def write_report(report: SuiteReport, directory: str | Path) -> list[Path]:
    """Write suite.csv and suite.png under directory; return the paths."""
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)

    csv_path = target / "suite.csv"
    with open(csv_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["row", "ok", "checks"])
        for row in report.rows:
            writer.writerow([row.name, "ok" if row.ok else "fail", row.checks])

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    png_path = target / "suite.png"
    names = [row.name for row in reversed(report.rows)]
    counts = [row.checks for row in reversed(report.rows)]
    colors = ["#2a9d4e" if row.ok else "#c0392b" for row in reversed(report.rows)]
    fig, ax = plt.subplots(figsize=(9, 0.45 * len(names) + 1.5))
    ax.barh(names, counts, color=colors)
    ax.set_xlabel("checks")
    ax.set_title(f"verification suite: {'ok' if report.ok else 'FAIL'}")
    for i, count in enumerate(counts):
        ax.text(count, i, f" {count}", va="center", fontsize=8)
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [csv_path, png_path]
