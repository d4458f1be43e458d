"""Generator contracts: schema validity, byte determinism, the configured
long-tail shape, and the planted scenario structure."""

from __future__ import annotations

import hashlib
from collections import Counter

import numpy as np
import pytest

from recruitlens.datagen import (
    CASE1_INDUSTRIES,
    CASE1_POSITION,
    CASE2_CITY,
    CASE2_POSITION,
    GenConfig,
    GenConfigError,
    generate,
    scenario_corpus,
)
from recruitlens.ingest import parse_dataset


def test_generated_corpus_has_zero_rejects():
    records, report = parse_dataset(generate(GenConfig(record_count=1000, seed=1)), "csv")
    assert report.total_lines == 1000
    assert report.accepted == 1000
    assert not report.rejects
    assert len(records) == 1000


def test_same_seed_same_bytes():
    config = GenConfig(record_count=2000, seed=9)
    a = hashlib.sha256(generate(config)).hexdigest()
    b = hashlib.sha256(generate(config)).hexdigest()
    assert a == b


def test_different_seeds_differ():
    assert generate(GenConfig(record_count=500, seed=1)) != generate(
        GenConfig(record_count=500, seed=2)
    )


def test_config_validation():
    with pytest.raises(GenConfigError):
        GenConfig(record_count=0).validate()
    with pytest.raises(GenConfigError):
        GenConfig(cities_per_province=(0, 3)).validate()
    with pytest.raises(GenConfigError):
        GenConfig(cities_per_province=(5, 2)).validate()
    with pytest.raises(GenConfigError):
        GenConfig(province_count=27).validate()
    with pytest.raises(GenConfigError):
        GenConfig(flexible_share=0.9, negotiable_share=0.2).validate()
    with pytest.raises(GenConfigError):
        GenConfig(zipf_exponent=0.0).validate()


def test_config_file_round_trip(tmp_path):
    path = tmp_path / "gen.conf"
    path.write_text(
        "# comment\n"
        "record_count=1234\n"
        "position_count = 99\n"
        "zipf_exponent=1.4\n"
        "cities_per_province=2,5\n"
        "permanent_salary=11.0,0.3\n"
        "seed=77\n"
    )
    config = GenConfig.from_file(path)
    assert config.record_count == 1234
    assert config.position_count == 99
    assert config.zipf_exponent == 1.4
    assert config.cities_per_province == (2, 5)
    assert config.permanent_salary == (11.0, 0.3)
    assert config.seed == 77

    bad = tmp_path / "bad.conf"
    bad.write_text("nonsense=1\n")
    with pytest.raises(GenConfigError):
        GenConfig.from_file(bad)


def test_zipf_long_tail_singletons():
    config = GenConfig(record_count=10_000, position_count=2000, zipf_exponent=1.2, seed=5)
    records, _ = parse_dataset(generate(config), "csv")
    counts = Counter(r.position_id for r in records)
    singletons = sum(1 for c in counts.values() if c == 1)
    assert singletons / len(counts) >= 0.40


def test_zipf_tail_exponent_within_tolerance():
    config = GenConfig(record_count=10_000, position_count=2000, zipf_exponent=1.2, seed=5)
    records, _ = parse_dataset(generate(config), "csv")
    freqs = np.array(
        sorted(Counter(r.position_id for r in records).values(), reverse=True), dtype=float
    )
    mask = freqs >= 5
    assert mask.sum() >= 20
    ranks = np.arange(1, len(freqs) + 1)[mask]
    slope, _ = np.polyfit(np.log(ranks), np.log(freqs[mask]), 1)
    assert abs(-slope - config.zipf_exponent) <= 0.2


def test_salary_base_carries_paid_months():
    records, _ = parse_dataset(generate(GenConfig(record_count=500, seed=3)), "csv")
    for r in records:
        if r.salary_type.encode().startswith("MONTHLY+"):
            assert r.salary_base == str(12 + r.salary_type.bonus_months)
        elif r.salary_type.encode() in ("MONTHLY", "YEARLY"):
            assert r.salary_base == "12"
        else:
            assert r.salary_base is None


def test_unknown_scenario():
    with pytest.raises(ValueError):
        scenario_corpus("CASE3")


def test_scenario_corpora_deterministic_and_valid():
    for name in ("CASE1", "CASE2"):
        a = scenario_corpus(name)
        assert a == scenario_corpus(name)
        _, report = parse_dataset(a, "csv")
        assert not report.rejects


def test_case1_planted_structure():
    records, _ = parse_dataset(scenario_corpus("CASE1"), "csv")
    planted = [r for r in records if r.position_id == CASE1_POSITION]
    assert planted
    assert {r.education for r in planted} == {"GP"}
    assert {r.experience for r in planted} == {"EdD"}
    assert {r.industry_id for r in planted} <= set(CASE1_INDUSTRIES)
    # the planted position dominates the (GP, EdD) slice
    pair_counts = Counter(
        r.position_id for r in records if (r.education, r.experience) == ("GP", "EdD")
    )
    assert pair_counts.most_common(1)[0][0] == CASE1_POSITION


def test_case2_planted_structure():
    records, _ = parse_dataset(scenario_corpus("CASE2"), "csv")
    planted_city = [r for r in records if r.city == CASE2_CITY]
    assert planted_city
    assert {r.position_id for r in planted_city} == {CASE2_POSITION}
    planted = [r for r in records if r.position_id == CASE2_POSITION]
    assert {r.education for r in planted} == {"Gx"}
    assert {r.experience for r in planted} == {"Eas"}
