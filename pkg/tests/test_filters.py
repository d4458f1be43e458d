"""Filter matching semantics against a brute-force scan, plus the
monotonicity properties of AND-of-ORs filtering."""

from __future__ import annotations

import numpy as np

import oracles
from recruitlens.codes import EDUCATION_ORDER, EXPERIENCE_ORDER, EmploymentClass
from recruitlens.filters import FilterState, match


def random_filter(rng, snapshot) -> FilterState:
    """A random-but-plausible FilterState drawing values from the snapshot."""

    def sample(dimension, k):
        values = sorted(snapshot.index(dimension))
        take = int(rng.integers(0, k + 1))
        if not take:
            return frozenset()
        return frozenset(rng.choice(values, size=min(take, len(values)), replace=False))

    pairs = frozenset()
    if rng.random() < 0.3:
        pairs = frozenset(
            (
                EDUCATION_ORDER[int(rng.integers(0, 8))],
                EXPERIENCE_ORDER[int(rng.integers(0, 8))],
            )
            for _ in range(int(rng.integers(1, 3)))
        )
    employment = None
    if rng.random() < 0.25:
        employment = (
            EmploymentClass.PERMANENT if rng.random() < 0.5 else EmploymentClass.FLEXIBLE
        )
    return FilterState(
        education=sample("education", 2),
        experience=sample("experience", 2),
        edu_exp_pairs=pairs,
        provinces=sample("province", 2),
        cities=sample("city", 2),
        industries=sample("industry", 2),
        positions=sample("position", 1),
        employment_class=employment,
    )


def test_empty_filter_matches_all(snapshot_seed42):
    assert match(snapshot_seed42, FilterState()) == list(range(len(snapshot_seed42)))


def test_pair_filter(snapshot_seed42):
    state = FilterState(edu_exp_pairs=frozenset({("GP", "EdD")}))
    indices = match(snapshot_seed42, state)
    assert indices, "seeded corpus should contain the GP/EdD pair"
    for i in indices:
        r = snapshot_seed42.records[i]
        assert (r.education, r.experience) == ("GP", "EdD")
    others = set(range(len(snapshot_seed42))) - set(indices)
    for i in others:
        r = snapshot_seed42.records[i]
        assert (r.education, r.experience) != ("GP", "EdD")


def test_match_equals_scan_on_random_filters(snapshot_seed42):
    rng = np.random.default_rng(23)
    for _ in range(60):
        state = random_filter(rng, snapshot_seed42)
        assert match(snapshot_seed42, state) == oracles.match_scan(
            snapshot_seed42.records, state
        )


def test_intersection_example(snapshot_seed42):
    province = sorted(snapshot_seed42.index("province"))[0]
    industries = frozenset(sorted(snapshot_seed42.index("industry"))[:3])
    state = FilterState(provinces=frozenset({province}), industries=industries)
    assert match(snapshot_seed42, state) == oracles.match_scan(
        snapshot_seed42.records, state
    )


def test_widening_a_dimension_never_shrinks(snapshot_seed42):
    base = FilterState(education=frozenset({"GP"}))
    wider = FilterState(education=frozenset({"GP", "Go"}))
    assert len(match(snapshot_seed42, wider)) >= len(match(snapshot_seed42, base))


def test_adding_a_dimension_never_grows(snapshot_seed42):
    rng = np.random.default_rng(5)
    for _ in range(20):
        state = random_filter(rng, snapshot_seed42)
        n = len(match(snapshot_seed42, state))
        province = sorted(snapshot_seed42.index("province"))[0]
        narrowed = FilterState(
            education=state.education,
            experience=state.experience,
            edu_exp_pairs=state.edu_exp_pairs,
            provinces=state.provinces or frozenset({province}),
            cities=state.cities,
            industries=state.industries,
            positions=state.positions,
            employment_class=state.employment_class,
        )
        if state.provinces:
            continue
        assert len(match(snapshot_seed42, narrowed)) <= n


def test_class_filter_excludes_negotiable(snapshot_seed42):
    permanent = match(
        snapshot_seed42, FilterState(employment_class=EmploymentClass.PERMANENT)
    )
    flexible = match(
        snapshot_seed42, FilterState(employment_class=EmploymentClass.FLEXIBLE)
    )
    negotiable = [
        i for i, r in enumerate(snapshot_seed42.records) if r.employment_class is None
    ]
    assert negotiable, "seeded corpus should include negotiable postings"
    assert not (set(permanent) | set(flexible)) & set(negotiable)
    assert len(permanent) + len(flexible) + len(negotiable) == len(snapshot_seed42)


def test_nonexistent_value_matches_nothing(snapshot_seed42):
    state = FilterState(positions=frozenset({"zzzz-zzzz-zzzz-zzzz"}))
    assert match(snapshot_seed42, state) == []
