"""Analyst-facing table of counted patterns and their metrics.

One row per observed pattern, carrying frequency, length, frequency*length
(which surfaces patterns that are both long and common), and the root
prefix of a configurable length k with that prefix's own count. Patterns
shorter than k are treated as rare: no prefix, prefix count 0.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass

from .codec import CountRegister, PatternDictionary

DEFAULT_PREFIX_LENGTH = 5

#: Sort key for byte-lexicographic pattern ordering (not a metric).
PATTERN_COLUMN = "pattern"


class InvalidPrefixLength(ValueError):
    pass


class MetricKind(enum.Enum):
    FREQUENCY = "frequency"
    LENGTH = "length"
    FREQUENCY_TIMES_LENGTH = "freq_times_length"
    PREFIX_COUNT = "prefix_count"


@dataclass(frozen=True)
class PatternRecord:
    pattern: bytes
    length: int
    frequency: int
    freq_times_length: int
    prefix: bytes | None
    prefix_count: int


@dataclass
class PatternTable:
    rows: list[PatternRecord]
    prefix_length_k: int


def make_record(pattern: bytes, counts: CountRegister, k: int) -> PatternRecord:
    """Build the metric row for one pattern against the register."""
    if k < 1:
        raise InvalidPrefixLength(f"prefix length must be >= 1, got {k}")
    frequency = counts.counts[pattern]
    length = len(pattern)
    if length >= k:
        prefix = pattern[:k]
        prefix_count = counts.counts[prefix]
    else:
        prefix = None
        prefix_count = 0
    return PatternRecord(
        pattern=pattern,
        length=length,
        frequency=frequency,
        freq_times_length=frequency * length,
        prefix=prefix,
        prefix_count=prefix_count,
    )


def build_table(
    dictionary: PatternDictionary, counts: CountRegister, k: int = DEFAULT_PREFIX_LENGTH
) -> PatternTable:
    """Tabulate every pattern that was actually observed (count >= 1).

    Single-byte patterns whose byte never occurred stay out; they would add
    up to 256 all-zero noise rows.
    """
    if k < 1:
        raise InvalidPrefixLength(f"prefix length must be >= 1, got {k}")
    rows = [
        make_record(pattern, counts, k)
        for pattern in dictionary.entries.values()
        if counts.counts[pattern] >= 1
    ]
    return PatternTable(rows=rows, prefix_length_k=k)


def metric_value(record: PatternRecord, metric: MetricKind) -> int:
    if metric is MetricKind.FREQUENCY:
        return record.frequency
    if metric is MetricKind.LENGTH:
        return record.length
    if metric is MetricKind.FREQUENCY_TIMES_LENGTH:
        return record.freq_times_length
    if metric is MetricKind.PREFIX_COUNT:
        return record.prefix_count
    raise ValueError(f"unhandled metric {metric!r}")


def sort_table(
    table: PatternTable,
    column: MetricKind | str = MetricKind.FREQUENCY,
    direction: str = "desc",
) -> list[PatternRecord]:
    """Order rows by a metric column (numeric) or by pattern bytes.

    Equal metric values tie-break on byte-lexicographic pattern, ascending,
    regardless of direction.
    """
    if direction not in ("asc", "desc"):
        raise ValueError(f"direction must be 'asc' or 'desc', got {direction!r}")
    if isinstance(column, str) and column == PATTERN_COLUMN:
        return sorted(table.rows, key=lambda r: r.pattern, reverse=direction == "desc")
    metric = MetricKind(column) if isinstance(column, str) else column
    if direction == "desc":
        return sorted(table.rows, key=lambda r: (-metric_value(r, metric), r.pattern))
    return sorted(table.rows, key=lambda r: (metric_value(r, metric), r.pattern))


def top_n(table: PatternTable, metric: MetricKind, n: int) -> list[PatternRecord]:
    """First n rows of the descending sort (fewer if the table is smaller)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return sort_table(table, metric, "desc")[:n]


def escape_pattern(pattern: bytes) -> str:
    """Printable ASCII passes through; backslash doubles; the rest is \\xNN."""
    parts = []
    for b in pattern:
        if b == 0x5C:
            parts.append("\\\\")
        elif 0x20 <= b <= 0x7E:
            parts.append(chr(b))
        else:
            parts.append(f"\\x{b:02x}")
    return "".join(parts)


def unescape_pattern(text: str) -> bytes:
    """Invert :func:`escape_pattern`."""
    out = bytearray()
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\":
            if text[i : i + 2] == "\\\\":
                out.append(0x5C)
                i += 2
            elif text[i + 1 : i + 2] == "x":
                out.append(int(text[i + 2 : i + 4], 16))
                i += 4
            else:
                raise ValueError(f"bad escape at offset {i} in {text!r}")
        else:
            out.append(ord(ch))
            i += 1
    return bytes(out)


def rows_to_dicts(rows: list[PatternRecord]) -> list[dict]:
    return [
        {
            "pattern": escape_pattern(r.pattern),
            "length": r.length,
            "frequency": r.frequency,
            "freq_times_length": r.freq_times_length,
            "prefix": None if r.prefix is None else escape_pattern(r.prefix),
            "prefix_count": r.prefix_count,
        }
        for r in rows
    ]


def rows_to_json(rows: list[PatternRecord]) -> str:
    return json.dumps(rows_to_dicts(rows))


def rows_to_csv(rows: list[PatternRecord]) -> str:
    """RFC-4180 CSV with a header row; absent prefix is an empty field."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(
        ["pattern", "length", "frequency", "freq_times_length", "prefix", "prefix_count"]
    )
    for r in rows:
        writer.writerow(
            [
                escape_pattern(r.pattern),
                r.length,
                r.frequency,
                r.freq_times_length,
                "" if r.prefix is None else escape_pattern(r.prefix),
                r.prefix_count,
            ]
        )
    return buf.getvalue()
