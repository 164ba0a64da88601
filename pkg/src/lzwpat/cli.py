"""Command-line entry point: compress, decompress, analyze, render, bench, serve."""

from __future__ import annotations

import argparse
import json
import os
import socket
import sys
from pathlib import Path

from . import bench as bench_mod
from . import container
from .analysis import analyze_auto
from .codec import CorruptStream, decode, encode_with_counts
from .colormaps import UnknownColormap, list_colormaps
from .render import RenderConfig, RenderLimitExceeded, render_view
from .table import (
    DEFAULT_PREFIX_LENGTH,
    PATTERN_COLUMN,
    MetricKind,
    build_table,
    rows_to_csv,
    rows_to_json,
    sort_table,
)

DEFAULT_DATA_DIR = "lzwpat-data"
DATA_DIR_ENV = "LZWPAT_DATA_DIR"
STATIC_DIR_ENV = "LZWPAT_STATIC_DIR"

_METRIC_NAMES = [m.value for m in MetricKind]
_SORT_COLUMNS = [PATTERN_COLUMN] + _METRIC_NAMES


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _sizes(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return values


def cmd_compress(args: argparse.Namespace) -> int:
    data = Path(args.input).read_bytes()
    stream, _, _ = encode_with_counts(data)
    archive = container.pack(stream)
    Path(args.output).write_bytes(archive)
    print(f"original: {len(data)} bytes")
    print(f"compressed: {len(archive)} bytes")
    if data:
        print(f"ratio: {len(archive) / len(data):.2%}")
    else:
        print("ratio: n/a (empty input)")
    return 0


def cmd_decompress(args: argparse.Namespace) -> int:
    stream = container.unpack(Path(args.input).read_bytes())
    original = decode(stream)
    Path(args.output).write_bytes(original)
    print(f"restored {len(original)} bytes")
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    analysis = analyze_auto(Path(args.input).read_bytes())
    table = build_table(analysis.dictionary, analysis.counts, args.prefix_len)
    if args.sort == PATTERN_COLUMN:
        rows = sort_table(table, PATTERN_COLUMN, "asc")
    else:
        rows = sort_table(table, MetricKind(args.sort), "desc")
    if args.top is not None:
        rows = rows[: args.top]
    if args.format == "csv":
        sys.stdout.write(rows_to_csv(rows))
    else:
        print(rows_to_json(rows))
    if args.plot:
        from . import plots

        metric = (
            MetricKind.FREQUENCY if args.sort == PATTERN_COLUMN else MetricKind(args.sort)
        )
        plots.save_table_plot(rows, metric, args.plot)
        print(f"wrote {args.plot}", file=sys.stderr)
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    analysis = analyze_auto(Path(args.input).read_bytes())
    config = RenderConfig(
        metric=MetricKind(args.metric),
        colormap_name=args.colormap,
        prefix_length_k=args.prefix_len,
        output_kind=args.format,
    )
    text = render_view(analysis, config)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    report = bench_mod.run_bench(args.sizes, args.runs, args.interval_ms)
    print(bench_mod.format_table(report))
    for row in report.rows:
        if row.counter_increments != row.n_bytes:
            print(
                f"error: counter increments {row.counter_increments} != N {row.n_bytes}",
                file=sys.stderr,
            )
            return 1
    print(bench_mod.report_to_json(report))
    if args.plot:
        from . import plots

        plots.save_bench_plot(report, args.plot)
        print(f"wrote {args.plot}", file=sys.stderr)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import create_app

    data_dir = args.data_dir or os.environ.get(DATA_DIR_ENV) or DEFAULT_DATA_DIR
    static_dir = os.environ.get(STATIC_DIR_ENV)
    if static_dir is None and Path("frontend/dist").is_dir():
        static_dir = "frontend/dist"
    app = create_app(data_dir, static_dir=static_dir)
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, args.port))
    except OSError as exc:
        sock.close()
        print(f"error: cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 1
    sock.listen(128)
    host, port = sock.getsockname()[:2]
    print(f"serving on http://{host}:{port} (data dir: {data_dir})", flush=True)
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    server.run(sockets=[sock])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lzwpat",
        description="Pattern-counting LZW compressor and log pattern explorer.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compress", help="compress a file to a .lzwv archive")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("decompress", help="restore the original file from an archive")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_decompress)

    p = sub.add_parser("analyze", help="emit the pattern table (raw or .lzwv input)")
    p.add_argument("input")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--prefix-len", type=_positive_int, default=DEFAULT_PREFIX_LENGTH)
    p.add_argument("--sort", choices=_SORT_COLUMNS, default=MetricKind.FREQUENCY.value)
    p.add_argument("--top", type=_positive_int, default=None)
    p.add_argument("--plot", metavar="PNG", help="also write a bar chart of the rows")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("render", help="emit a color-annotated view of the file")
    p.add_argument("input")
    p.add_argument("--metric", choices=_METRIC_NAMES, default=MetricKind.FREQUENCY.value)
    p.add_argument("--colormap", default="jet", help=f"one of: {', '.join(list_colormaps())}")
    p.add_argument("--prefix-len", type=_positive_int, default=DEFAULT_PREFIX_LENGTH)
    p.add_argument("--format", choices=["ansi", "html", "json"], default="ansi")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="worst-case timing ladder for the encoder")
    p.add_argument("--sizes", type=_sizes, default=list(bench_mod.DEFAULT_SIZES))
    p.add_argument("--runs", type=_positive_int, default=bench_mod.DEFAULT_RUNS)
    p.add_argument("--interval-ms", type=float, default=0.0)
    p.add_argument("--plot", metavar="PNG", help="also write the timing figure")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="start the HTTP API (and web UI if built)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--data-dir", default=None, help=f"defaults to ${DATA_DIR_ENV} or ./{DEFAULT_DATA_DIR}")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        OSError,
        CorruptStream,
        container.ContainerError,
        UnknownColormap,
        RenderLimitExceeded,
        ValueError,
    ) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
