"""HTTP surface: the filter grammar, endpoint contracts, error envelope,
payload invariants on live responses, and byte determinism."""

from __future__ import annotations

import numpy as np
import pytest
from fastapi.testclient import TestClient

from recruitlens.filters import FilterState
from recruitlens.pipeline import build_snapshot
from recruitlens.service import (
    SnapshotHolder,
    create_app,
    decode_filter,
    encode_filter,
)
from test_filters import random_filter

ENDPOINTS = (
    "/api/sankey",
    "/api/regions",
    "/api/positions",
    "/api/scatter",
    "/api/bands",
    "/api/grid",
    "/api/flowers",
    "/api/treemap",
)


@pytest.fixture(scope="module")
def client(snapshot_seed42):
    return TestClient(create_app(snapshot_seed42))


# --- filter grammar ---------------------------------------------------------


def test_encode_empty_filter():
    assert encode_filter(FilterState()) == ""
    assert decode_filter("") == FilterState()


def test_decode_example():
    state = decode_filter("pairs=GP:EdD&province=K")
    assert state.edu_exp_pairs == {("GP", "EdD")}
    assert state.provinces == {"K"}


def test_encode_decode_round_trip_random(snapshot_seed42):
    rng = np.random.default_rng(31)
    for _ in range(500):
        state = random_filter(rng, snapshot_seed42)
        assert decode_filter(encode_filter(state)) == state


def test_decode_rejects_unknown_key():
    from recruitlens.service import ApiError

    with pytest.raises(ApiError) as err:
        decode_filter("flavor=spicy")
    assert err.value.code == "BAD_FILTER"


def test_decode_rejects_bad_values():
    from recruitlens.service import ApiError

    for query in (
        "education=XX",
        "experience=GP",
        "pairs=GPEdD",
        "pairs=GP:XX",
        "province=KK",
        "city=K01",
        "industry=abc",
        "position=nope",
        "class=SOMETIMES",
        "class=PERMANENT&class=FLEXIBLE",
    ):
        with pytest.raises(ApiError):
            decode_filter(query)


# --- endpoints ---------------------------------------------------------------


def test_health_reports_provenance(client, snapshot_seed42):
    body = client.get("/api/health").json()
    assert body["status"] == "ok"
    assert body["record_count"] == len(snapshot_seed42)
    assert body["provenance"] == snapshot_seed42.provenance.as_dict()


def test_sankey_total_equals_summary_count(client):
    summary = client.get("/api/summary").json()
    sankey = client.get("/api/sankey").json()
    assert sum(f["count"] for f in sankey["flows"]) == summary["record_count"]


def test_summary_respects_filter(client, snapshot_seed42):
    body = client.get("/api/summary?education=GP").json()
    expected = sum(1 for r in snapshot_seed42.records if r.education == "GP")
    assert body["record_count"] == expected


def test_every_endpoint_serves_filtered_queries(client):
    for endpoint in ENDPOINTS:
        response = client.get(f"{endpoint}?pairs=GP:EdD")
        assert response.status_code == 200, endpoint


def test_unknown_filter_key_is_bad_request(client):
    for endpoint in ENDPOINTS:
        response = client.get(f"{endpoint}?bogus=1")
        assert response.status_code == 400, endpoint
        body = response.json()
        assert body["code"] == "BAD_FILTER"
        assert set(body) == {"status", "code", "message"}


def test_treemap_errors(client):
    assert client.get("/api/treemap?level=CITY").status_code == 422
    response = client.get("/api/treemap?level=CITY&parent=Z")
    assert response.status_code == 404
    assert response.json()["code"] == "UNKNOWN_REGION"
    assert client.get("/api/treemap?level=BLOCK").status_code == 422


def test_scatter_axis_handling(client):
    default = client.get("/api/scatter").json()
    assert default["axis"]["dimension"] == "education"
    custom = client.get(
        "/api/scatter?dimension=experience&positive=ESu&positive=Eby&negative=EKk"
    ).json()
    assert custom["axis"]["positive"] == ["ESu", "Eby"]
    assert client.get("/api/scatter?dimension=education&positive=GP").status_code == 422
    assert (
        client.get(
            "/api/scatter?dimension=education&positive=GP&negative=GP"
        ).status_code
        == 422
    )


def test_responses_are_deterministic_bytes(client, snapshot_seed42):
    fresh = TestClient(create_app(snapshot_seed42))
    for endpoint in ENDPOINTS:
        url = f"{endpoint}?education=GP&education=Go"
        assert client.get(url).content == fresh.get(url).content, endpoint


def test_live_payload_invariants(client):
    # re-check sums/ranges on actual HTTP responses
    for query in ("", "?province=A", "?pairs=GP:EdD&class=PERMANENT"):
        sankey = client.get(f"/api/sankey{query}").json()
        summary = client.get(f"/api/summary{query}").json()
        assert sum(f["count"] for f in sankey["flows"]) == summary["record_count"]

        treemap = client.get(f"/api/treemap{query}").json()
        assert treemap["posting_count"] == sum(
            c["posting_count"] for c in treemap["children"]
        )
        for child in treemap["children"]:
            fractions = sum(d["fraction"] for d in child["top_positions"])
            assert fractions + child["other_positions"] == pytest.approx(1.0, abs=1e-9)
            assert 0.0 <= child["salary_opacity"] <= 1.0

        for bar in client.get(f"/api/regions{query}").json()["provinces"]:
            assert 0.0 <= bar["salary_opacity"] <= 1.0
        for flower in client.get(f"/api/flowers{query}").json()["industries"]:
            assert 0.0 <= flower["x"] <= 1.0 and 0.0 <= flower["y"] <= 1.0


def test_snapshot_swap_is_atomic(snapshot_seed42, corpus_5k):
    holder = SnapshotHolder(snapshot_seed42)
    client = TestClient(create_app(holder))
    before = client.get("/api/health").json()["record_count"]
    assert before == len(snapshot_seed42)
    replacement = build_snapshot(corpus_5k, 0.1)
    holder.swap(replacement)
    after = client.get("/api/health").json()["record_count"]
    assert after == len(replacement)
