import threading

import pytest
from fastapi.testclient import TestClient

from lzwpat.codec import encode_with_counts
from lzwpat.container import HEADER_LEN, pack
from lzwpat.server import create_app


@pytest.fixture
def client(tmp_path):
    app = create_app(tmp_path / "data")
    with TestClient(app) as c:
        yield c


def upload(client, data: bytes, name: str = "test.log"):
    return client.post(f"/api/files?name={name}", content=data)


def test_upload_raw(client):
    response = upload(client, b"ABABAB")
    assert response.status_code == 200
    entry = response.json()
    assert entry["size"] == 6
    assert entry["name"] == "test.log"
    assert entry["id"]


def test_upload_is_content_addressed(client):
    first = upload(client, b"ABABAB").json()
    second = upload(client, b"ABABAB").json()
    assert first["id"] == second["id"]


def test_upload_archive_same_id_as_raw(client):
    raw_id = upload(client, b"ABABAB").json()["id"]
    stream, _, _ = encode_with_counts(b"ABABAB")
    archive_id = upload(client, pack(stream), name="abab.lzwv").json()["id"]
    assert archive_id == raw_id


def test_upload_corrupt_archive_names_class(client):
    stream, _, _ = encode_with_counts(b"ABABAB")
    archive = bytearray(pack(stream))
    archive[4] = 9  # bad version
    response = upload(client, bytes(archive))
    assert response.status_code == 400
    assert "UnsupportedVersion" in response.json()["detail"]

    # a truncation that stays bit-level valid is only caught when the
    # decoded length misses the header's declared length
    response = upload(client, bytes(pack(stream)[:-1]))
    assert response.status_code == 400
    assert "CorruptStream" in response.json()["detail"]

    response = upload(client, bytes(pack(stream)[:HEADER_LEN - 1]))
    assert response.status_code == 400
    assert "TruncatedPayload" in response.json()["detail"]


def test_upload_too_large(tmp_path):
    app = create_app(tmp_path / "data", max_upload=16)
    with TestClient(app) as client:
        response = upload(client, b"x" * 17)
        assert response.status_code == 413


def test_table_endpoint(client):
    file_id = upload(client, b"ABABAB").json()["id"]
    response = client.get(
        f"/api/files/{file_id}/table",
        params={"metric": "frequency", "order": "desc", "prefix_len": 2},
    )
    assert response.status_code == 200
    rows = response.json()
    assert rows[0]["frequency"] == 3
    assert [r["pattern"] for r in rows] == ["A", "AB", "ABA", "B", "BA"]
    a_row = next(r for r in rows if r["pattern"] == "A")
    assert a_row["prefix_count"] == 0  # shorter than prefix_len


def test_table_sort_by_pattern_and_top(client):
    file_id = upload(client, b"ABABAB").json()["id"]
    rows = client.get(
        f"/api/files/{file_id}/table", params={"metric": "pattern", "order": "asc", "top": 2}
    ).json()
    assert [r["pattern"] for r in rows] == ["A", "AB"]


def test_table_bad_metric(client):
    file_id = upload(client, b"ABABAB").json()["id"]
    response = client.get(f"/api/files/{file_id}/table", params={"metric": "nope"})
    assert response.status_code == 400


def test_table_unknown_id(client):
    assert client.get("/api/files/feedbead/table").status_code == 404


def test_spans_endpoint(client):
    file_id = upload(client, b"ABABAB").json()["id"]
    payload = client.get(
        f"/api/files/{file_id}/spans",
        params={"metric": "frequency", "colormap": "jet", "prefix_len": 2},
    ).json()
    assert payload["original_length"] == 6
    assert len(payload["spans"]) == 4
    b_span = payload["spans"][1]
    assert b_span["pattern"] == "B"
    assert b_span["color"] == "#000080"  # jet at t=0


def test_spans_degenerate_normalization(client):
    file_id = upload(client, b"aa").json()["id"]
    payload = client.get(f"/api/files/{file_id}/spans", params={"colormap": "jet"}).json()
    assert {s["normalized"] for s in payload["spans"]} == {0.5}
    assert {s["color"] for s in payload["spans"]} == {"#80ff80"}


def test_spans_unknown_colormap(client):
    file_id = upload(client, b"ABABAB").json()["id"]
    response = client.get(f"/api/files/{file_id}/spans", params={"colormap": "nope"})
    assert response.status_code == 400


def test_spans_agree_with_table(client):
    file_id = upload(client, b"the quick brown fox jumps over the lazy dog " * 8).json()["id"]
    for metric in ("frequency", "length", "freq_times_length", "prefix_count"):
        spans = client.get(
            f"/api/files/{file_id}/spans", params={"metric": metric, "prefix_len": 3}
        ).json()["spans"]
        rows = client.get(
            f"/api/files/{file_id}/table", params={"metric": metric, "prefix_len": 3}
        ).json()
        by_pattern = {r["pattern"]: r[metric] for r in rows}
        for span in spans:
            assert span["metric_value"] == by_pattern[span["pattern"]]


def test_raw_and_head(client):
    file_id = upload(client, b"ABABAB").json()["id"]
    response = client.get(f"/api/files/{file_id}/raw")
    assert response.content == b"ABABAB"
    head = client.head(f"/api/files/{file_id}/raw")
    assert head.status_code == 200
    assert head.headers["content-length"] == "6"
    assert head.content == b""


def test_raw_unknown_id(client):
    assert client.get("/api/files/none/raw").status_code == 404


def test_colormaps_endpoint(client):
    assert client.get("/api/colormaps").json() == ["sequential_blue", "coolwarm", "jet"]


def test_analysis_survives_cache_drop(tmp_path):
    # second app instance over the same data dir replays from the archive
    data = b"repeat repeat repeat repeat"
    app = create_app(tmp_path / "data")
    with TestClient(app) as client:
        file_id = upload(client, data).json()["id"]
        table_before = client.get(f"/api/files/{file_id}/table").json()
    app2 = create_app(tmp_path / "data")
    with TestClient(app2) as client2:
        table_after = client2.get(f"/api/files/{file_id}/table").json()
        raw = client2.get(f"/api/files/{file_id}/raw").content
    assert table_after == table_before
    assert raw == data


def test_concurrent_uploads(client):
    results = []

    def worker(payload):
        results.append(upload(client, payload).status_code)

    threads = [
        threading.Thread(target=worker, args=(b"first file " * 50,)),
        threading.Thread(target=worker, args=(b"second file " * 50,)),
    ]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == [200, 200]
