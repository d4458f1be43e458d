"""Shared corpora and snapshots; session-scoped because generation and
pipeline runs dominate suite runtime."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from recruitlens.datagen import GenConfig, generate, scenario_corpus
from recruitlens.ingest import parse_dataset
from recruitlens.pipeline import build_snapshot


def make_record(**overrides):
    """A valid record row as a plain field dict, for hand-built cases."""
    from recruitlens.ingest import RawRecord, validate_record

    fields = {
        "_id": "ab12-cd34-ef56-ab78",
        "province": "K",
        "city": "K001",
        "salary": "",
        "salary_type": "MONTHLY",
        "salary_base": "12",
        "upper_bound": "12000",
        "lower_bound": "8000",
        "company": "comp0001",
        "industry": "abc123",
        "education": "GP",
        "experience": "EdD",
    }
    fields.update({k: str(v) for k, v in overrides.items()})
    return validate_record(RawRecord(1, fields))


@pytest.fixture(scope="session")
def corpus_seed42():
    """10k-record generated corpus used across analytics/service tests."""
    config = GenConfig(
        record_count=10_000,
        position_count=800,
        company_count=1500,
        industry_count=40,
        province_count=16,
        zipf_exponent=1.1,
        seed=42,
    )
    records, report = parse_dataset(generate(config), "csv")
    assert not report.rejects
    return records


@pytest.fixture(scope="session")
def snapshot_seed42(corpus_seed42):
    return build_snapshot(corpus_seed42, 0.05)


@pytest.fixture(scope="session")
def corpus_5k():
    records, report = parse_dataset(
        generate(GenConfig(record_count=5000, position_count=300, seed=7, zipf_exponent=1.0)),
        "csv",
    )
    assert not report.rejects
    return records


@pytest.fixture(scope="session")
def snapshot_5k(corpus_5k):
    return build_snapshot(corpus_5k, 0.1)


@pytest.fixture(scope="session")
def case1_snapshot():
    records, report = parse_dataset(scenario_corpus("CASE1"), "csv")
    assert not report.rejects
    return build_snapshot(records, 0.05)


@pytest.fixture(scope="session")
def case2_snapshot():
    records, report = parse_dataset(scenario_corpus("CASE2"), "csv")
    assert not report.rejects
    return build_snapshot(records, 0.05)
