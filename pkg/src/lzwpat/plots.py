"""Matplotlib figures for the report paths (bench ladder, top patterns)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import colormaps
from .bench import BenchReport
from .table import MetricKind, PatternRecord, escape_pattern, metric_value


def save_bench_plot(report: BenchReport, path: str) -> None:
    """Timing ladder: mean time and per-byte time against input size."""
    ns = [row.n_bytes for row in report.rows]
    fig, (ax_ms, ax_nsb) = plt.subplots(1, 2, figsize=(9, 3.5))
    ax_ms.plot(ns, [row.mean_ms for row in report.rows], marker="o")
    ax_ms.set_xlabel("input size (bytes)")
    ax_ms.set_ylabel("mean time (ms)")
    ax_ms.set_xscale("log")
    ax_ms.set_yscale("log")
    ax_ms.grid(True, which="both", alpha=0.3)
    ax_nsb.plot(ns, [row.per_byte_ns for row in report.rows], marker="o", color="#b0413e")
    ax_nsb.set_xlabel("input size (bytes)")
    ax_nsb.set_ylabel("per-byte time (ns)")
    ax_nsb.set_xscale("log")
    ax_nsb.grid(True, which="both", alpha=0.3)
    fig.suptitle(f"repeated-character encode, {report.runs} runs per size")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_table_plot(
    rows: list[PatternRecord], metric: MetricKind, path: str, limit: int = 20
) -> None:
    """Horizontal bars for the top rows, colored by normalized metric value."""
    rows = rows[:limit]
    if not rows:
        raise ValueError("no rows to plot")
    values = [metric_value(r, metric) for r in rows]
    labels = [escape_pattern(r.pattern) for r in rows]
    colors = [
        colormaps.to_hex(colormaps.sample(colormaps.COOLWARM, t))
        for t in colormaps.normalize(values)
    ]
    fig, ax = plt.subplots(figsize=(8, 0.35 * len(rows) + 1.2))
    ypos = range(len(rows) - 1, -1, -1)
    ax.barh(list(ypos), values, color=colors, edgecolor="#444")
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(labels, fontfamily="monospace", fontsize=8)
    ax.set_xlabel(metric.value)
    ax.set_title(f"top {len(rows)} patterns by {metric.value}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
