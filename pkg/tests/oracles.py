"""Independent recomputations used to check the engine.

Everything here is a deliberately naive linear scan or a library routine
(numpy.percentile) so that tests never share code paths with the
implementations they verify.
"""

from __future__ import annotations

from collections import Counter, defaultdict

import numpy as np

from recruitlens.codes import EmploymentClass
from recruitlens.normalize import NormalizedRecord


def percentile(values, p: float) -> float:
    return float(np.percentile(np.asarray(values, dtype=float), p * 100, method="linear"))


def fences(values) -> tuple[float, float]:
    q1 = percentile(values, 0.25)
    q3 = percentile(values, 0.75)
    iqr = q3 - q1
    return q1 - 1.5 * iqr, q3 + 1.5 * iqr


def match_scan(records, state) -> list[int]:
    """Record indices matching a FilterState, by brute-force scan."""
    out = []
    for i, r in enumerate(records):
        if state.education and r.education not in state.education:
            continue
        if state.experience and r.experience not in state.experience:
            continue
        if state.edu_exp_pairs and (r.education, r.experience) not in state.edu_exp_pairs:
            continue
        if state.provinces and r.province not in state.provinces:
            continue
        if state.cities and r.city not in state.cities:
            continue
        if state.industries and r.industry_id not in state.industries:
            continue
        if state.positions and r.position_id not in state.positions:
            continue
        if state.employment_class is not None and r.employment_class is not state.employment_class:
            continue
        out.append(i)
    return out


def salaried(records: list[NormalizedRecord]) -> list[float]:
    return [r.annual_midpoint for r in records if r.annual_midpoint is not None]


def mean_or_none(values) -> float | None:
    return float(np.mean(values)) if values else None


def flow_counts(records) -> dict[tuple[str, str], int]:
    return dict(Counter((r.education, r.experience) for r in records))


def province_stats(records) -> dict[str, tuple[int, float | None]]:
    counts: Counter[str] = Counter()
    sal: dict[str, list[float]] = defaultdict(list)
    for r in records:
        counts[r.province] += 1
        if r.annual_midpoint is not None:
            sal[r.province].append(r.annual_midpoint)
    return {p: (counts[p], mean_or_none(sal.get(p, []))) for p in counts}


def position_stats(records):
    """position -> (count, education proportions, experience proportions,
    per-province salary means)."""
    grouped: dict[str, list[NormalizedRecord]] = defaultdict(list)
    for r in records:
        grouped[r.position_id].append(r)
    out = {}
    for pid, rs in grouped.items():
        n = len(rs)
        edu = {c: k / n for c, k in Counter(r.education for r in rs).items()}
        exp = {c: k / n for c, k in Counter(r.experience for r in rs).items()}
        sal: dict[str, list[float]] = defaultdict(list)
        for r in rs:
            if r.annual_midpoint is not None:
                sal[r.province].append(r.annual_midpoint)
        out[pid] = (n, edu, exp, {p: float(np.mean(v)) for p, v in sal.items()})
    return out


def block_extents(records):
    """position -> (edu rank span, exp rank span, salary span, count)."""
    grouped: dict[str, list[NormalizedRecord]] = defaultdict(list)
    for r in records:
        grouped[r.position_id].append(r)
    out = {}
    for pid, rs in grouped.items():
        lows = [r.annual_lower for r in rs if r.annual_lower is not None]
        highs = [r.annual_upper for r in rs if r.annual_upper is not None]
        out[pid] = (
            (min(r.education_rank for r in rs), max(r.education_rank for r in rs)),
            (min(r.experience_rank for r in rs), max(r.experience_rank for r in rs)),
            (min(lows), max(highs)) if lows else None,
            len(rs),
        )
    return out


def band_fractions(records) -> tuple[dict[str, float], dict[str, float]]:
    positions: dict[str, list[NormalizedRecord]] = defaultdict(list)
    for r in records:
        positions[r.position_id].append(r)
    total = len(positions)
    edu: Counter[str] = Counter()
    exp: Counter[str] = Counter()
    for rs in positions.values():
        for code in {r.education for r in rs}:
            edu[code] += 1
        for code in {r.experience for r in rs}:
            exp[code] += 1
    return (
        {c: k / total for c, k in edu.items()},
        {c: k / total for c, k in exp.items()},
    )


def grid_stats(records):
    """(industry means, province means, cell counts) over the subset."""
    ind: dict[str, list[float]] = defaultdict(list)
    prov: dict[str, list[float]] = defaultdict(list)
    cells: Counter[tuple[str, str]] = Counter()
    for r in records:
        cells[(r.industry_id, r.province)] += 1
        if r.annual_midpoint is not None:
            ind[r.industry_id].append(r.annual_midpoint)
            prov[r.province].append(r.annual_midpoint)
    return (
        {k: float(np.mean(v)) for k, v in ind.items()},
        {k: float(np.mean(v)) for k, v in prov.items()},
        dict(cells),
    )


def flower_stats(records):
    """industry -> (count, x, y, mean edu rank, mean exp rank, mean salary)."""
    grouped: dict[str, list[NormalizedRecord]] = defaultdict(list)
    for r in records:
        grouped[r.industry_id].append(r)
    out = {}
    for ind, rs in grouped.items():
        n = len(rs)
        out[ind] = (
            n,
            sum(1 for r in rs if r.education_tier.value == "HIGH") / n,
            sum(1 for r in rs if r.experience_tier.value == "HIGH") / n,
            float(np.mean([r.education_rank for r in rs])),
            float(np.mean([r.experience_rank for r in rs])),
            mean_or_none(salaried(rs)),
        )
    return out


def top_shares(records, key, n=5):
    counts = Counter(key(r) for r in records)
    top = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:n]
    return [(ident, c / len(records)) for ident, c in top]


def arc_for(records, record) -> float:
    """Empirical CDF of a flexible record's midpoint among same-kind records."""
    cohort = [
        r.annual_midpoint
        for r in records
        if r.employment_class is EmploymentClass.FLEXIBLE
        and r.salary_type.kind is record.salary_type.kind
    ]
    return sum(1 for v in cohort if v <= record.annual_midpoint) / len(cohort)
