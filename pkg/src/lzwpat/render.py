"""Human-viewable output of an annotated file: ANSI terminal, HTML, JSON.

Every renderer keeps the text content intact (modulo the declared \\xNN
escaping of non-printables) and colors one run per phrase span. ANSI uses
24-bit background colors (SGR 48;2;r;g;b), so a truecolor terminal is
required. Inputs above 16 MiB are refused; export the table instead.
"""

from __future__ import annotations

import html
import json
from dataclasses import dataclass

from .analysis import FileAnalysis
from .colormaps import get_colormap, to_hex
from .spans import AnnotatedSpan, annotate, spans_from_stream, spans_to_dicts
from .table import (
    DEFAULT_PREFIX_LENGTH,
    MetricKind,
    PatternTable,
    build_table,
    escape_pattern,
    rows_to_dicts,
)

MAX_RENDER_BYTES = 16 * 1024 * 1024

RESET = "\x1b[0m"


class RenderLimitExceeded(ValueError):
    pass


@dataclass(frozen=True)
class RenderConfig:
    metric: MetricKind = MetricKind.FREQUENCY
    colormap_name: str = "jet"
    prefix_length_k: int = DEFAULT_PREFIX_LENGTH
    output_kind: str = "ansi"  # ansi | html | json

    def __post_init__(self) -> None:
        get_colormap(self.colormap_name)  # raises UnknownColormap early
        if self.prefix_length_k < 1:
            raise ValueError(f"prefix length must be >= 1, got {self.prefix_length_k}")
        if self.output_kind not in ("ansi", "html", "json"):
            raise ValueError(f"unknown output kind {self.output_kind!r}")


def _bg_escape(rgb: tuple[int, int, int]) -> str:
    r, g, b = rgb
    return f"\x1b[48;2;{r};{g};{b}m"


def render_ansi(annotated: list[AnnotatedSpan], config: RenderConfig) -> str:
    """Colored terminal text; stripping escapes restores the printable text.

    Newlines pass through uncolored (reset before, re-apply after) so the
    background never bleeds across the line end.
    """
    out: list[str] = []
    for a in annotated:
        color = _bg_escape(a.color)
        out.append(color)
        data = a.span.pattern
        for i, b in enumerate(data):
            if b == 0x0A:
                out.append(RESET + "\n")
                if i + 1 < len(data):
                    out.append(color)
            elif 0x20 <= b <= 0x7E:
                out.append(chr(b))
            else:
                out.append(f"\\x{b:02x}")
    out.append(RESET)
    return "".join(out)


def _html_fragment_text(data: bytes) -> str:
    parts = []
    for b in data:
        if 0x20 <= b <= 0x7E:
            parts.append(html.escape(chr(b), quote=True))
        else:
            parts.append(f"\\x{b:02x}")
    return "".join(parts)


def render_html(
    annotated: list[AnnotatedSpan],
    original: bytes,
    config: RenderConfig,
    title: str = "pattern view",
) -> str:
    """Standalone HTML document, one inline-styled element per span fragment.

    Spans are split at newline bytes so the block layout mirrors the file's
    line structure; each fragment carries a tooltip with the pattern and
    the selected metric value.
    """
    if len(original) > MAX_RENDER_BYTES:
        raise RenderLimitExceeded(
            f"{len(original)} bytes exceeds the {MAX_RENDER_BYTES} byte render limit"
        )
    body: list[str] = []
    for a in annotated:
        tooltip = html.escape(
            f"pattern: {escape_pattern(a.span.pattern)} | "
            f"{config.metric.value}: {a.metric_value}",
            quote=True,
        )
        style = f"background-color:{to_hex(a.color)}"
        for i, fragment in enumerate(a.span.pattern.split(b"\n")):
            if i:
                body.append("\n")
            if fragment:
                body.append(
                    f'<span class="p" style="{style}" title="{tooltip}">'
                    f"{_html_fragment_text(fragment)}</span>"
                )
    return (
        "<!DOCTYPE html>\n"
        '<html><head><meta charset="utf-8">\n'
        f"<title>{html.escape(title)}</title>\n"
        "<style>\n"
        "body { background: #1e1e1e; color: #d4d4d4; }\n"
        "pre { font-family: monospace; font-size: 13px; line-height: 1.35; }\n"
        "span.p { color: #000; }\n"
        "</style>\n"
        "</head><body>\n"
        f"<pre>{''.join(body)}</pre>\n"
        "</body></html>\n"
    )


def interchange_dict(
    annotated: list[AnnotatedSpan], table: PatternTable, config: RenderConfig
) -> dict:
    """The JSON-interchange payload consumed by the web UI and scripts."""
    original_length = annotated[-1].span.end if annotated else 0
    return {
        "original_length": original_length,
        "metric": config.metric.value,
        "colormap": config.colormap_name,
        "prefix_length": config.prefix_length_k,
        "spans": spans_to_dicts(annotated),
        "table": rows_to_dicts(table.rows),
    }


def export_json(
    annotated: list[AnnotatedSpan], table: PatternTable, config: RenderConfig
) -> str:
    return json.dumps(interchange_dict(annotated, table, config))


def render_view(analysis: FileAnalysis, config: RenderConfig) -> str:
    """Annotate an analyzed file and dispatch to the configured renderer."""
    if len(analysis.original) > MAX_RENDER_BYTES:
        raise RenderLimitExceeded(
            f"{len(analysis.original)} bytes exceeds the {MAX_RENDER_BYTES} byte render limit"
        )
    spans = spans_from_stream(analysis.stream, analysis.dictionary)
    annotated = annotate(
        spans,
        analysis.counts,
        config.metric,
        config.prefix_length_k,
        config.colormap_name,
    )
    if config.output_kind == "ansi":
        return render_ansi(annotated, config)
    if config.output_kind == "html":
        return render_html(annotated, analysis.original, config)
    table = build_table(analysis.dictionary, analysis.counts, config.prefix_length_k)
    return export_json(annotated, table, config)
