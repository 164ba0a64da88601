"""Worst-case timing harness for the counting encoder.

Feeds the encoder N bytes of one repeating character -- the input that
resets the phrase buffer least often and maximizes prefix counting -- and
reports mean wall time, per-byte time, and the instrumented increment
counter, which must equal N exactly. The linearity ratio compares per-byte
cost at the largest and smallest N.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .codec import encode_with_counts

DEFAULT_SIZES = (10_000, 20_000, 30_000, 40_000, 50_000, 80_000, 160_000, 320_000, 640_000)
DEFAULT_RUNS = 20


@dataclass(frozen=True)
class BenchRow:
    n_bytes: int
    mean_ms: float
    per_byte_ns: float
    counter_increments: int


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    runs: int
    linearity_ratio: float


def run_bench(
    sizes=DEFAULT_SIZES,
    runs: int = DEFAULT_RUNS,
    interval_ms: float = 0.0,
    fill: bytes = b"a",
) -> BenchReport:
    """Encode each size ``runs`` times, optionally sleeping between runs."""
    if not sizes or min(sizes) < 1:
        raise ValueError("sizes must be a non-empty list of positive ints")
    if runs < 1:
        raise ValueError(f"runs must be >= 1, got {runs}")
    rows = []
    for n in sizes:
        data = fill * n
        elapsed = 0.0
        increments = 0
        for r in range(runs):
            t0 = time.perf_counter()
            result = encode_with_counts(data)
            elapsed += time.perf_counter() - t0
            increments = result.counts.total_increments
            if interval_ms and r + 1 < runs:
                time.sleep(interval_ms / 1000.0)
        mean_ms = elapsed / runs * 1000.0
        rows.append(
            BenchRow(
                n_bytes=n,
                mean_ms=mean_ms,
                per_byte_ns=mean_ms * 1e6 / n,
                counter_increments=increments,
            )
        )
    lo = min(rows, key=lambda r: r.n_bytes)
    hi = max(rows, key=lambda r: r.n_bytes)
    ratio = hi.per_byte_ns / lo.per_byte_ns if lo.per_byte_ns else 1.0
    if lo is hi:
        ratio = 1.0
    return BenchReport(rows=tuple(rows), runs=runs, linearity_ratio=ratio)


def format_table(report: BenchReport) -> str:
    lines = [
        f"{'N (bytes)':>12}  {'mean (ms)':>12}  {'per byte (ns)':>14}  {'increments':>12}",
    ]
    for row in report.rows:
        lines.append(
            f"{row.n_bytes:>12}  {row.mean_ms:>12.3f}  {row.per_byte_ns:>14.2f}  "
            f"{row.counter_increments:>12}"
        )
    lines.append(
        f"runs per size: {report.runs}; "
        f"per-byte ratio (largest/smallest N): {report.linearity_ratio:.2f}"
    )
    return "\n".join(lines)


def report_to_dict(report: BenchReport) -> dict:
    return {
        "runs": report.runs,
        "linearity_ratio": report.linearity_ratio,
        "rows": [
            {
                "n_bytes": r.n_bytes,
                "mean_ms": r.mean_ms,
                "per_byte_ns": r.per_byte_ns,
                "counter_increments": r.counter_increments,
            }
            for r in report.rows
        ],
    }


def report_to_json(report: BenchReport) -> str:
    return json.dumps(report_to_dict(report))
