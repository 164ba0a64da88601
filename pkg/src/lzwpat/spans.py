"""Map a code stream back onto the original file as colored phrase spans.

One span per emitted code, in stream order; together they tile the whole
file without gaps or overlaps. Annotation attaches a metric value, its
min-max normalized position over the span set, and the sampled color.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import colormaps
from .codec import CorruptStream, CountRegister, EncodedStream, PatternDictionary
from .colormaps import RGB, Colormap
from .table import (
    DEFAULT_PREFIX_LENGTH,
    MetricKind,
    escape_pattern,
    make_record,
    metric_value,
)


@dataclass(frozen=True)
class Span:
    start: int  # inclusive byte offset
    end: int  # exclusive byte offset
    code: int
    pattern: bytes


@dataclass(frozen=True)
class AnnotatedSpan:
    span: Span
    metric_value: int
    normalized: float
    color: RGB


def spans_from_stream(stream: EncodedStream, dictionary: PatternDictionary) -> list[Span]:
    """One span per code; raises CorruptStream on unresolvable codes."""
    spans = []
    offset = 0
    for code in stream.codes:
        pattern = dictionary.pattern_for(code)
        spans.append(Span(start=offset, end=offset + len(pattern), code=code, pattern=pattern))
        offset += len(pattern)
    if offset != stream.original_length:
        raise CorruptStream(
            f"spans cover {offset} bytes but the stream declares {stream.original_length}"
        )
    return spans


def annotate(
    spans: list[Span],
    counts: CountRegister,
    metric: MetricKind,
    k: int = DEFAULT_PREFIX_LENGTH,
    colormap: Colormap | str = "jet",
) -> list[AnnotatedSpan]:
    """Attach metric values, normalized positions, and colors to spans.

    Geometry is untouched; only the attached values change with metric, k,
    or colormap choice.
    """
    cmap = colormaps.get_colormap(colormap)
    records = {}
    for span in spans:
        if span.pattern not in records:
            records[span.pattern] = make_record(span.pattern, counts, k)
    values = [metric_value(records[span.pattern], metric) for span in spans]
    if not spans:
        return []
    normalized = colormaps.normalize(values)
    return [
        AnnotatedSpan(span=span, metric_value=v, normalized=t, color=colormaps.sample(cmap, t))
        for span, v, t in zip(spans, values, normalized)
    ]


def spans_to_dicts(annotated: list[AnnotatedSpan]) -> list[dict]:
    return [
        {
            "start": a.span.start,
            "end": a.span.end,
            "pattern": escape_pattern(a.span.pattern),
            "metric_value": a.metric_value,
            "normalized": a.normalized,
            "color": colormaps.to_hex(a.color),
        }
        for a in annotated
    ]
