"""HTTP JSON API over uploads, pattern tables, and annotated spans.

Uploads are content-addressed by the hash of the *decoded* file, so a raw
log and an archive of the same log land on one id. The packed archive is
kept on disk beside the upload as the single analysis artifact; dictionary
and counts replay from it on any cache miss.
"""

from __future__ import annotations

import hashlib
import json
import threading
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from . import container
from .analysis import FileAnalysis, analyze_archive, analyze_bytes
from .codec import CorruptStream
from .colormaps import UnknownColormap, list_colormaps
from .render import RenderConfig, interchange_dict
from .spans import annotate, spans_from_stream
from .table import (
    DEFAULT_PREFIX_LENGTH,
    PATTERN_COLUMN,
    MetricKind,
    build_table,
    rows_to_dicts,
    sort_table,
)

DEFAULT_MAX_UPLOAD = 64 * 1024 * 1024


@dataclass(frozen=True)
class FileEntry:
    id: str
    name: str
    size: int
    uploaded_at: str


class FileStore:
    """Content-addressed storage of uploads plus cached analyses."""

    def __init__(self, data_dir: Path, max_upload: int = DEFAULT_MAX_UPLOAD):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self.max_upload = max_upload
        self._cache: dict[str, FileAnalysis] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock_for(self, file_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(file_id, threading.Lock())

    def _dir(self, file_id: str) -> Path:
        return self.data_dir / file_id

    def put(self, body: bytes, name: str) -> FileEntry:
        """Store an upload (raw bytes or .lzwv) and cache its analysis."""
        if container.is_archive(body):
            analysis = analyze_archive(body)
            archive = body
        else:
            analysis = analyze_bytes(body)
            archive = container.pack(analysis.stream)
        file_id = hashlib.sha256(analysis.original).hexdigest()
        with self._lock_for(file_id):
            target = self._dir(file_id)
            meta_path = target / "meta.json"
            if meta_path.exists():
                entry = FileEntry(**json.loads(meta_path.read_text()))
            else:
                target.mkdir(parents=True, exist_ok=True)
                entry = FileEntry(
                    id=file_id,
                    name=name,
                    size=len(analysis.original),
                    uploaded_at=datetime.now(timezone.utc).isoformat(),
                )
                (target / "content").write_bytes(analysis.original)
                (target / "archive.lzwv").write_bytes(archive)
                meta_path.write_text(json.dumps(asdict(entry)))
            self._cache[file_id] = analysis
        return entry

    def entry(self, file_id: str) -> FileEntry | None:
        meta_path = self._dir(file_id) / "meta.json"
        if not meta_path.exists():
            return None
        return FileEntry(**json.loads(meta_path.read_text()))

    def original(self, file_id: str) -> bytes:
        return (self._dir(file_id) / "content").read_bytes()

    def analysis(self, file_id: str) -> FileAnalysis:
        with self._lock_for(file_id):
            cached = self._cache.get(file_id)
            if cached is None:
                cached = analyze_archive((self._dir(file_id) / "archive.lzwv").read_bytes())
                self._cache[file_id] = cached
            return cached


def _parse_metric(value: str) -> MetricKind:
    try:
        return MetricKind(value)
    except ValueError:
        raise HTTPException(
            status_code=400,
            detail=f"unknown metric {value!r}; one of: "
            + ", ".join(m.value for m in MetricKind),
        ) from None


def create_app(
    data_dir: Path | str,
    static_dir: Path | str | None = None,
    max_upload: int = DEFAULT_MAX_UPLOAD,
) -> FastAPI:
    store = FileStore(Path(data_dir), max_upload)
    app = FastAPI(title="lzwpat api")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store

    def _require_entry(file_id: str) -> FileEntry:
        entry = store.entry(file_id)
        if entry is None:
            raise HTTPException(status_code=404, detail=f"no file with id {file_id}")
        return entry

    @app.post("/api/files")
    async def upload_file(request: Request, name: str = Query(default="upload")):
        body = await request.body()
        if len(body) > store.max_upload:
            raise HTTPException(
                status_code=413,
                detail=f"body of {len(body)} bytes exceeds limit {store.max_upload}",
            )
        try:
            entry = store.put(body, name)
        except (container.ContainerError, CorruptStream) as exc:
            raise HTTPException(
                status_code=400, detail=f"{type(exc).__name__}: {exc}"
            ) from None
        return asdict(entry)

    @app.get("/api/files/{file_id}/table")
    def get_table(
        file_id: str,
        metric: str = Query(default=MetricKind.FREQUENCY.value),
        order: str = Query(default="desc"),
        prefix_len: int = Query(default=DEFAULT_PREFIX_LENGTH),
        top: int | None = Query(default=None),
    ):
        _require_entry(file_id)
        if order not in ("asc", "desc"):
            raise HTTPException(status_code=400, detail=f"order must be asc or desc, got {order!r}")
        if prefix_len < 1:
            raise HTTPException(status_code=400, detail="prefix_len must be >= 1")
        if top is not None and top < 1:
            raise HTTPException(status_code=400, detail="top must be >= 1")
        column = PATTERN_COLUMN if metric == PATTERN_COLUMN else _parse_metric(metric)
        analysis = store.analysis(file_id)
        table = build_table(analysis.dictionary, analysis.counts, prefix_len)
        rows = sort_table(table, column, order)
        if top is not None:
            rows = rows[:top]
        return rows_to_dicts(rows)

    @app.get("/api/files/{file_id}/spans")
    def get_spans(
        file_id: str,
        metric: str = Query(default=MetricKind.FREQUENCY.value),
        colormap: str = Query(default="jet"),
        prefix_len: int = Query(default=DEFAULT_PREFIX_LENGTH),
    ):
        _require_entry(file_id)
        if prefix_len < 1:
            raise HTTPException(status_code=400, detail="prefix_len must be >= 1")
        kind = _parse_metric(metric)
        try:
            config = RenderConfig(
                metric=kind, colormap_name=colormap, prefix_length_k=prefix_len,
                output_kind="json",
            )
        except UnknownColormap as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        analysis = store.analysis(file_id)
        spans = spans_from_stream(analysis.stream, analysis.dictionary)
        annotated = annotate(spans, analysis.counts, kind, prefix_len, colormap)
        table = build_table(analysis.dictionary, analysis.counts, prefix_len)
        return interchange_dict(annotated, table, config)

    @app.api_route("/api/files/{file_id}/raw", methods=["GET", "HEAD"])
    def get_raw(file_id: str):
        _require_entry(file_id)
        return Response(
            content=store.original(file_id), media_type="application/octet-stream"
        )

    @app.get("/api/colormaps")
    def get_colormaps():
        return list_colormaps()

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
