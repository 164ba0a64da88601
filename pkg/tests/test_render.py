import json
import re

import pytest

from lzwpat.analysis import analyze_bytes
from lzwpat.codec import encode_with_counts
from lzwpat.colormaps import UnknownColormap
from lzwpat.render import (
    RenderConfig,
    RenderLimitExceeded,
    export_json,
    interchange_dict,
    render_ansi,
    render_html,
    render_view,
)
from lzwpat.spans import annotate, spans_from_stream
from lzwpat.table import MetricKind, build_table

ESCAPE_RE = re.compile(r"\x1b\[[0-9;]*m")


def annotated_for(data, metric=MetricKind.FREQUENCY, k=2, colormap="jet"):
    result = encode_with_counts(data)
    spans = spans_from_stream(result.stream, result.dictionary)
    return result, annotate(spans, result.counts, metric, k, colormap)


def test_ansi_contains_background_escapes():
    _, annotated = annotated_for(b"ABABAB")
    text = render_ansi(annotated, RenderConfig())
    # span "B" is the low extreme: jet t=0 color 0;0;128
    assert "\x1b[48;2;0;0;128mB" in text
    assert text.endswith("\x1b[0m")
    assert text.count("\x1b[48;2;") == 4


def test_ansi_strip_escapes_restores_text():
    data = b"line one\nline two: <ok>\n"
    _, annotated = annotated_for(data)
    text = render_ansi(annotated, RenderConfig())
    assert ESCAPE_RE.sub("", text) == data.decode("ascii")


def test_ansi_escapes_nonprintables():
    _, annotated = annotated_for(b"\x00\x01")
    text = ESCAPE_RE.sub("", render_ansi(annotated, RenderConfig()))
    assert text == "\\x00\\x01"


def test_html_element_count_and_colors():
    _, annotated = annotated_for(b"ABABAB")
    config = RenderConfig(output_kind="html")
    doc = render_html(annotated, b"ABABAB", config)
    assert doc.count("<span") == 4
    assert "background-color:#000080" in doc  # the "B" span at t=0
    assert doc.startswith("<!DOCTYPE html>")
    assert "http" not in doc.lower().replace("http-equiv", "")  # self-contained


def test_html_escaping():
    from lzwpat.spans import AnnotatedSpan, Span

    data = b'a<b & "c">'
    span = Span(start=0, end=len(data), code=256, pattern=data)
    annotated = [AnnotatedSpan(span=span, metric_value=1, normalized=0.5, color=(128, 255, 128))]
    doc = render_html(annotated, data, RenderConfig(output_kind="html"))
    assert "a&lt;b &amp; &quot;c&quot;&gt;" in doc


def test_html_hex_color_conversion():
    result, _ = annotated_for(b"ABABAB")
    spans = spans_from_stream(result.stream, result.dictionary)
    annotated = annotate(spans, result.counts, MetricKind.FREQUENCY, 2, "jet")
    # midpoint color (128,255,128) appears for any span at t=0.5; build one
    doc = render_html(annotated, b"ABABAB", RenderConfig(output_kind="html"))
    assert "#800000" in doc  # t=1.0 spans (A, AB, AB)


def test_html_splits_spans_at_newlines():
    data = b"aa\naa"  # encodes with a span containing the newline
    _, annotated = annotated_for(data)
    doc = render_html(annotated, data, RenderConfig(output_kind="html"))
    body = doc[doc.index("<pre>") : doc.index("</pre>")]
    assert "\n" in body
    for fragment in re.findall(r"<span[^>]*>([^<]*)</span>", body):
        assert "\n" not in fragment


def test_html_tooltip_carries_metric():
    _, annotated = annotated_for(b"ABABAB")
    doc = render_html(annotated, b"ABABAB", RenderConfig(output_kind="html"))
    assert 'title="pattern: AB | frequency: 3"' in doc


def test_export_json_round_trip():
    result, annotated = annotated_for(b"ABABAB")
    table = build_table(result.dictionary, result.counts, 2)
    config = RenderConfig(prefix_length_k=2, output_kind="json")
    payload = interchange_dict(annotated, table, config)
    assert json.loads(export_json(annotated, table, config)) == payload
    assert payload["original_length"] == 6
    assert payload["metric"] == "frequency"
    assert payload["colormap"] == "jet"
    assert payload["prefix_length"] == 2
    assert len(payload["spans"]) == 4
    assert payload["spans"][1] == {
        "start": 1,
        "end": 2,
        "pattern": "B",
        "metric_value": 1,
        "normalized": 0.0,
        "color": "#000080",
    }
    assert len(payload["table"]) == 5


def test_export_json_empty_file():
    result = encode_with_counts(b"")
    table = build_table(result.dictionary, result.counts, 2)
    payload = json.loads(export_json([], table, RenderConfig(output_kind="json")))
    assert payload["spans"] == []
    assert payload["table"] == []
    assert payload["original_length"] == 0


def test_render_config_rejects_unknown_colormap():
    with pytest.raises(UnknownColormap):
        RenderConfig(colormap_name="nope")


def test_render_config_rejects_bad_k():
    with pytest.raises(ValueError):
        RenderConfig(prefix_length_k=0)


def test_render_view_dispatch():
    analysis = analyze_bytes(b"ABABAB")
    ansi = render_view(analysis, RenderConfig(prefix_length_k=2))
    assert "\x1b[48;2;" in ansi
    html_doc = render_view(analysis, RenderConfig(prefix_length_k=2, output_kind="html"))
    assert html_doc.count("<span") == 4
    payload = json.loads(
        render_view(analysis, RenderConfig(prefix_length_k=2, output_kind="json"))
    )
    assert len(payload["spans"]) == 4


def test_render_view_is_deterministic():
    analysis = analyze_bytes(b"some log line\nanother line\n")
    config = RenderConfig(output_kind="html")
    assert render_view(analysis, config) == render_view(analysis, config)


def test_render_limit(monkeypatch):
    monkeypatch.setattr("lzwpat.render.MAX_RENDER_BYTES", 4)
    analysis = analyze_bytes(b"too big for the patched limit")
    with pytest.raises(RenderLimitExceeded):
        render_view(analysis, RenderConfig())
