"""Subprocess probe for the determinism acceptance check: builds a corpus,
a snapshot cache and a set of API payloads, then prints one SHA-256 per
artifact. Two runs (under different hash seeds) must print identical
lines.
"""

from __future__ import annotations

import hashlib
import sys

from fastapi.testclient import TestClient

from recruitlens.datagen import GenConfig, generate
from recruitlens.ingest import parse_dataset
from recruitlens.pipeline import build_snapshot, snapshot_to_bytes
from recruitlens.service import create_app

URLS = (
    "/api/summary",
    "/api/sankey?education=GP&education=Go",
    "/api/regions",
    "/api/positions?pairs=GP:EdD",
    "/api/scatter",
    "/api/bands",
    "/api/grid?class=PERMANENT",
    "/api/flowers",
    "/api/treemap",
)


def main() -> None:
    corpus = generate(GenConfig(record_count=3000, position_count=300, seed=42))
    print("corpus", hashlib.sha256(corpus).hexdigest())
    records, _ = parse_dataset(corpus, "csv")
    snapshot = build_snapshot(records, 0.05)
    print("cache", hashlib.sha256(snapshot_to_bytes(snapshot)).hexdigest())
    client = TestClient(create_app(snapshot))
    for url in URLS:
        body = client.get(url).content
        print(url, hashlib.sha256(body).hexdigest())


if __name__ == "__main__":
    sys.exit(main())
