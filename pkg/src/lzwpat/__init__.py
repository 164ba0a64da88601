"""Pattern-counting LZW compression and log exploration toolkit."""

from .analysis import FileAnalysis, analyze_archive, analyze_auto, analyze_bytes
from .codec import (
    CorruptStream,
    CountRegister,
    EncodedStream,
    EncodeResult,
    PatternDictionary,
    decode,
    encode_with_counts,
    increment_prefixes,
    replay_counts,
)
from .colormaps import (
    Colormap,
    UnknownColormap,
    get_colormap,
    list_colormaps,
    normalize,
    sample,
    to_hex,
)
from .container import (
    BadMagic,
    ContainerError,
    ContainerHeader,
    NonzeroPadding,
    TruncatedPayload,
    UnsupportedVersion,
    code_width,
    is_archive,
    pack,
    unpack,
)
from .spans import AnnotatedSpan, Span, annotate, spans_from_stream
from .table import (
    InvalidPrefixLength,
    MetricKind,
    PatternRecord,
    PatternTable,
    build_table,
    metric_value,
    sort_table,
    top_n,
)

__version__ = "0.1.0"

__all__ = [
    "AnnotatedSpan",
    "BadMagic",
    "Colormap",
    "ContainerError",
    "ContainerHeader",
    "CorruptStream",
    "CountRegister",
    "EncodeResult",
    "EncodedStream",
    "FileAnalysis",
    "InvalidPrefixLength",
    "MetricKind",
    "NonzeroPadding",
    "PatternDictionary",
    "PatternRecord",
    "PatternTable",
    "Span",
    "TruncatedPayload",
    "UnknownColormap",
    "UnsupportedVersion",
    "analyze_archive",
    "analyze_auto",
    "analyze_bytes",
    "annotate",
    "build_table",
    "code_width",
    "decode",
    "encode_with_counts",
    "get_colormap",
    "increment_prefixes",
    "is_archive",
    "list_colormaps",
    "metric_value",
    "normalize",
    "pack",
    "replay_counts",
    "sample",
    "sort_table",
    "spans_from_stream",
    "to_hex",
    "top_n",
    "unpack",
]
