"""Aggregate payloads for the eight linked views, computed from a
DatasetSnapshot under a FilterState.

Every operation is a pure read of the immutable snapshot, implemented as
vectorized group-bys over the snapshot's integer-coded columns so a
single endpoint stays well under its latency budget on ~100k-row
corpora. A shared convention holds throughout: record counts include
negotiable-salary postings, salary statistics exclude them (they carry
no annual figures). All min-max normalizations map a degenerate value
set to 1.0 so a lone bar or cell renders fully visible; ranking ties
break by identifier ascending, which is code order by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .codes import (
    EDUCATION_ORDER,
    EDUCATION_RANK,
    EXPERIENCE_ORDER,
    EXPERIENCE_RANK,
    EmploymentClass,
)
from .filters import FilterState, match_array
from .pipeline import WAGE_KINDS, DatasetSnapshot, SnapshotColumns, _interpolated

# Tier boundaries in rank space (coherent with the tier tables: education
# HIGH starts at bachelor, experience HIGH at five years).
_EDU_HIGH_RANK = EDUCATION_RANK["GP"]
_EXP_HIGH_RANK = EXPERIENCE_RANK["EaZ"]


class UnknownRegionError(ValueError):
    """Treemap drill-down into a region the snapshot does not contain."""


def _minmax_or_zero(values: np.ndarray, present: np.ndarray) -> np.ndarray:
    """Min-max normalize the entries flagged present; absent entries are
    0.0 and a degenerate span maps to 1.0."""
    out = np.zeros(len(values))
    if not present.any():
        return out
    pool = values[present]
    lo, hi = float(pool.min()), float(pool.max())
    if hi <= lo:
        out[present] = 1.0
    else:
        out[present] = (pool - lo) / (hi - lo)
    return out


def _grouped_average(
    codes: np.ndarray, values: np.ndarray, size: int
) -> tuple[np.ndarray, np.ndarray]:
    """Per-group mean of the non-NaN values: (means, has-data mask)."""
    ok = ~np.isnan(values)
    sums = np.bincount(codes[ok], weights=values[ok], minlength=size)
    counts = np.bincount(codes[ok], minlength=size)
    has = counts > 0
    means = np.zeros(size)
    np.divide(sums, counts, out=means, where=has)
    return means, has


# --- A1: education-experience flows ----------------------------------------


@dataclass(frozen=True)
class FlowMatrix:
    flows: tuple[tuple[str, str, int], ...]
    education_totals: dict[str, int]
    experience_totals: dict[str, int]

    def to_payload(self) -> dict:
        return {
            "flows": [
                {"education": e, "experience": x, "count": c} for e, x, c in self.flows
            ],
            "education_totals": self.education_totals,
            "experience_totals": self.experience_totals,
        }


def sankey_flows(snapshot: DatasetSnapshot, state: FilterState) -> FlowMatrix:
    """Counts of matched records per (education, experience) pair."""
    idx = match_array(snapshot, state)
    cols = snapshot.columns
    joint = np.bincount(
        cols.education_rank[idx] * 8 + cols.experience_rank[idx], minlength=64
    ).reshape(8, 8)
    flows = tuple(
        (EDUCATION_ORDER[e], EXPERIENCE_ORDER[x], int(joint[e, x]))
        for e in range(8)
        for x in range(8)
        if joint[e, x]
    )
    edu_totals = joint.sum(axis=1)
    exp_totals = joint.sum(axis=0)
    return FlowMatrix(
        flows=flows,
        education_totals={
            EDUCATION_ORDER[e]: int(edu_totals[e]) for e in range(8) if edu_totals[e]
        },
        experience_totals={
            EXPERIENCE_ORDER[x]: int(exp_totals[x]) for x in range(8) if exp_totals[x]
        },
    )


# --- A2: per-province bars --------------------------------------------------


@dataclass(frozen=True)
class RegionBar:
    province: str
    record_count: int
    avg_salary: float | None
    salary_opacity: float
    city_count: int


@dataclass(frozen=True)
class RegionBarSet:
    provinces: tuple[RegionBar, ...]

    def to_payload(self) -> dict:
        return {
            "provinces": [
                {
                    "province": b.province,
                    "record_count": b.record_count,
                    "avg_salary": b.avg_salary,
                    "salary_opacity": b.salary_opacity,
                    "city_count": b.city_count,
                }
                for b in self.provinces
            ]
        }


def region_bars(snapshot: DatasetSnapshot, state: FilterState) -> RegionBarSet:
    """Recruitment scale and average salary per province. Bar opacity is the
    min-max-normalized average; the city count is snapshot-wide, not
    filter-dependent."""
    idx = match_array(snapshot, state)
    cols = snapshot.columns
    size = len(cols.provinces)
    counts = np.bincount(cols.province[idx], minlength=size)
    means, has_salary = _grouped_average(cols.province[idx], cols.midpoint[idx], size)
    opacities = _minmax_or_zero(means, has_salary)
    bars = tuple(
        RegionBar(
            province=cols.provinces[p],
            record_count=int(counts[p]),
            avg_salary=float(means[p]) if has_salary[p] else None,
            salary_opacity=float(opacities[p]),
            city_count=snapshot.city_count(cols.provinces[p]),
        )
        for p in range(size)
        if counts[p]
    )
    return RegionBarSet(bars)


# --- A3: job comparison rows ------------------------------------------------


class SalaryTier(str, Enum):
    HIGH = "HIGH"
    MID = "MID"
    LOW = "LOW"


@dataclass(frozen=True)
class RegionSalary:
    tier: SalaryTier
    avg_salary: float


@dataclass(frozen=True)
class PositionRow:
    position_id: str
    record_count: int
    education_proportions: dict[str, float]
    experience_proportions: dict[str, float]
    region_salary: dict[str, RegionSalary]


@dataclass(frozen=True)
class PositionRowSet:
    rows: tuple[PositionRow, ...]

    def to_payload(self) -> dict:
        return {
            "positions": [
                {
                    "position": row.position_id,
                    "record_count": row.record_count,
                    "education_proportions": row.education_proportions,
                    "experience_proportions": row.experience_proportions,
                    "region_salary": {
                        p: {"tier": rs.tier.value, "avg_salary": rs.avg_salary}
                        for p, rs in row.region_salary.items()
                    },
                }
                for row in self.rows
            ]
        }


def _tercile_tiers(averages: dict[str, float]) -> dict[str, SalaryTier]:
    """Split a row's per-province averages into salary terciles. Thresholds
    are the interpolated 1/3 and 2/3 percentiles; boundary values round up,
    so a single province classifies HIGH."""
    values = sorted(averages.values())
    t1 = _interpolated(values, 1 / 3)
    t2 = _interpolated(values, 2 / 3)
    tiers = {}
    for province, avg in averages.items():
        if avg >= t2:
            tiers[province] = SalaryTier.HIGH
        elif avg >= t1:
            tiers[province] = SalaryTier.MID
        else:
            tiers[province] = SalaryTier.LOW
    return tiers


def position_rows(snapshot: DatasetSnapshot, state: FilterState) -> PositionRowSet:
    """Per-position requirement proportions and regional salary tiers,
    sorted by record count descending (ties by identifier)."""
    idx = match_array(snapshot, state)
    cols = snapshot.columns
    n_pos = len(cols.positions)
    n_prov = len(cols.provinces)
    counts = np.bincount(cols.position[idx], minlength=n_pos)
    edu = np.bincount(
        cols.position[idx] * 8 + cols.education_rank[idx], minlength=n_pos * 8
    ).reshape(n_pos, 8)
    exp = np.bincount(
        cols.position[idx] * 8 + cols.experience_rank[idx], minlength=n_pos * 8
    ).reshape(n_pos, 8)

    sal_ok = idx[~np.isnan(cols.midpoint[idx])]
    key = cols.position[sal_ok].astype(np.int64) * n_prov + cols.province[sal_ok]
    sal_sums = np.bincount(key, weights=cols.midpoint[sal_ok], minlength=n_pos * n_prov)
    sal_counts = np.bincount(key, minlength=n_pos * n_prov)

    present = np.nonzero(counts)[0]
    order = present[np.lexsort((present, -counts[present]))]
    rows = []
    for p in order:
        n = int(counts[p])
        averages = {}
        for q in range(n_prov):
            k = p * n_prov + q
            if sal_counts[k]:
                averages[cols.provinces[q]] = float(sal_sums[k] / sal_counts[k])
        tiers = _tercile_tiers(averages) if averages else {}
        rows.append(
            PositionRow(
                position_id=cols.positions[p],
                record_count=n,
                education_proportions={
                    EDUCATION_ORDER[r]: int(edu[p, r]) / n for r in range(8) if edu[p, r]
                },
                experience_proportions={
                    EXPERIENCE_ORDER[r]: int(exp[p, r]) / n for r in range(8) if exp[p, r]
                },
                region_salary={
                    province: RegionSalary(tiers[province], avg)
                    for province, avg in averages.items()
                },
            )
        )
    return PositionRowSet(tuple(rows))


# --- A4: salary pattern glyphs ----------------------------------------------

AXIS_DIMENSIONS = ("education", "experience", "province", "city", "industry", "position")


@dataclass(frozen=True)
class AxisSpec:
    """One dimension split into a positive-side and a negative-side value set."""

    dimension: str
    positive: frozenset[str]
    negative: frozenset[str]

    def validate(self) -> None:
        if self.dimension not in AXIS_DIMENSIONS:
            raise ValueError(f"unknown axis dimension: {self.dimension!r}")
        if not self.positive or not self.negative:
            raise ValueError("both axis sides need at least one value")
        overlap = self.positive & self.negative
        if overlap:
            raise ValueError(f"axis sides overlap: {sorted(overlap)}")


# Default split: high-education codes vs low-education codes.
DEFAULT_AXIS = AxisSpec(
    "education", frozenset({"Gh", "Go", "GP"}), frozenset({"GZ", "Gz"})
)


@dataclass(frozen=True)
class GlyphPoint:
    side: str  # "+" or "-"
    jitter: float
    employment_class: EmploymentClass
    monthly_salary: float | None = None
    bonus_months: int | None = None
    wage_kind: str | None = None
    percentile_arc: float | None = None


def _axis_codes(cols: SnapshotColumns, dimension: str, values: frozenset[str]) -> np.ndarray:
    if dimension == "education":
        return np.array(sorted(EDUCATION_RANK[v] for v in values), dtype=np.int64)
    if dimension == "experience":
        return np.array(sorted(EXPERIENCE_RANK[v] for v in values), dtype=np.int64)
    table = {
        "province": cols.provinces,
        "city": cols.cities,
        "industry": cols.industries,
        "position": cols.positions,
    }[dimension]
    lookup = {v: i for i, v in enumerate(table)}
    return np.array(sorted(lookup[v] for v in values if v in lookup), dtype=np.int64)


def _axis_column(cols: SnapshotColumns, dimension: str) -> np.ndarray:
    return {
        "education": cols.education_rank,
        "experience": cols.experience_rank,
        "province": cols.province,
        "city": cols.city,
        "industry": cols.industry,
        "position": cols.position,
    }[dimension]


class GlyphSet:
    """Glyph columns, split by employment class; each group preserves
    matched-record order. ``points`` interleaves them back into global
    order for callers that want one glyph per record."""

    def __init__(
        self,
        axis: AxisSpec,
        perm_idx: np.ndarray,
        perm_side: np.ndarray,
        perm_jitter: np.ndarray,
        perm_monthly: np.ndarray,
        perm_bonus: np.ndarray,
        flex_idx: np.ndarray,
        flex_side: np.ndarray,
        flex_jitter: np.ndarray,
        flex_kind: np.ndarray,
        flex_arc: np.ndarray,
    ) -> None:
        self.axis = axis
        self._perm = (perm_idx, perm_side, perm_jitter, perm_monthly, perm_bonus)
        self._flex = (flex_idx, flex_side, flex_jitter, flex_kind, flex_arc)

    @property
    def points(self) -> tuple[GlyphPoint, ...]:
        perm_idx, perm_side, perm_jitter, perm_monthly, perm_bonus = self._perm
        flex_idx, flex_side, flex_jitter, flex_kind, flex_arc = self._flex
        tagged: list[tuple[int, GlyphPoint]] = []
        for i in range(len(perm_idx)):
            tagged.append(
                (
                    int(perm_idx[i]),
                    GlyphPoint(
                        side="+" if perm_side[i] > 0 else "-",
                        jitter=float(perm_jitter[i]),
                        employment_class=EmploymentClass.PERMANENT,
                        monthly_salary=float(perm_monthly[i]),
                        bonus_months=int(perm_bonus[i]),
                    ),
                )
            )
        for i in range(len(flex_idx)):
            tagged.append(
                (
                    int(flex_idx[i]),
                    GlyphPoint(
                        side="+" if flex_side[i] > 0 else "-",
                        jitter=float(flex_jitter[i]),
                        employment_class=EmploymentClass.FLEXIBLE,
                        wage_kind=WAGE_KINDS[int(flex_kind[i])].value,
                        percentile_arc=float(flex_arc[i]),
                    ),
                )
            )
        tagged.sort(key=lambda pair: pair[0])
        return tuple(point for _, point in tagged)

    def to_payload(self) -> dict:
        perm_idx, perm_side, perm_jitter, perm_monthly, perm_bonus = self._perm
        flex_idx, flex_side, flex_jitter, flex_kind, flex_arc = self._flex
        return {
            "axis": {
                "dimension": self.axis.dimension,
                "positive": sorted(self.axis.positive),
                "negative": sorted(self.axis.negative),
            },
            "permanent": {
                "side": ["+" if s > 0 else "-" for s in perm_side],
                "jitter": np.round(perm_jitter, 6).tolist(),
                "monthly_salary": np.round(perm_monthly, 2).tolist(),
                "bonus_months": perm_bonus.tolist(),
            },
            "flexible": {
                "side": ["+" if s > 0 else "-" for s in flex_side],
                "jitter": np.round(flex_jitter, 6).tolist(),
                "wage_kind": [WAGE_KINDS[k].value for k in flex_kind.tolist()],
                "percentile_arc": np.round(flex_arc, 6).tolist(),
            },
        }


def scatter_glyphs(
    snapshot: DatasetSnapshot, state: FilterState, axis: AxisSpec = DEFAULT_AXIS
) -> GlyphSet:
    """One glyph per matched salary-bearing record on the chosen axis side.

    Flexible-wage arcs are the empirical CDF of the record's annual
    midpoint among all matched records quoting the same wage kind (the
    cohort includes matched records that fall on neither axis side).
    """
    axis.validate()
    idx = match_array(snapshot, state)
    cols = snapshot.columns

    column = _axis_column(cols, axis.dimension)[idx]
    side = np.zeros(len(idx), dtype=np.int8)
    side[np.isin(column, _axis_codes(cols, axis.dimension, axis.positive))] = 1
    side[np.isin(column, _axis_codes(cols, axis.dimension, axis.negative))] = -1

    employment = cols.employment[idx]
    cohorts = {}
    flex_all = idx[employment == 2]
    for kind in range(len(WAGE_KINDS)):
        cohorts[kind] = np.sort(
            cols.midpoint[flex_all[cols.wage_kind[flex_all] == kind]]
        )

    perm_sel = (side != 0) & (employment == 1)
    flex_sel = (side != 0) & (employment == 2)
    perm = idx[perm_sel]
    flex = idx[flex_sel]

    flex_kind = cols.wage_kind[flex]
    arcs = np.empty(len(flex))
    for kind in range(len(WAGE_KINDS)):
        mask = flex_kind == kind
        if mask.any():
            cohort = cohorts[kind]
            arcs[mask] = (
                np.searchsorted(cohort, cols.midpoint[flex[mask]], side="right")
                / len(cohort)
            )

    return GlyphSet(
        axis=axis,
        perm_idx=perm,
        perm_side=side[perm_sel],
        perm_jitter=cols.jitter[perm],
        perm_monthly=cols.monthly_salary[perm],
        perm_bonus=cols.bonus_months[perm],
        flex_idx=flex,
        flex_side=side[flex_sel],
        flex_jitter=cols.jitter[flex],
        flex_kind=flex_kind,
        flex_arc=arcs,
    )


# --- A5: requirement/salary bands -------------------------------------------


@dataclass(frozen=True)
class PositionBlock:
    position_id: str
    education_rank_min: int
    education_rank_max: int
    experience_rank_min: int
    experience_rank_max: int
    salary_min: int | None
    salary_max: int | None
    record_count: int


@dataclass(frozen=True)
class BandDistribution:
    blocks: tuple[PositionBlock, ...]
    education_bands: dict[str, float]
    experience_bands: dict[str, float]

    def to_payload(self) -> dict:
        return {
            "blocks": [
                {
                    "position": b.position_id,
                    "education_rank_min": b.education_rank_min,
                    "education_rank_max": b.education_rank_max,
                    "experience_rank_min": b.experience_rank_min,
                    "experience_rank_max": b.experience_rank_max,
                    "salary_min": b.salary_min,
                    "salary_max": b.salary_max,
                    "record_count": b.record_count,
                }
                for b in self.blocks
            ],
            "education_bands": self.education_bands,
            "experience_bands": self.experience_bands,
        }


def requirement_bands(snapshot: DatasetSnapshot, state: FilterState) -> BandDistribution:
    """One block per matched position spanning its requirement-rank and
    annual-salary extents; per-level bands give the fraction of matched
    positions listing that level."""
    idx = match_array(snapshot, state)
    cols = snapshot.columns
    n_pos = len(cols.positions)
    counts = np.bincount(cols.position[idx], minlength=n_pos)

    edu_min = np.full(n_pos, 8, dtype=np.int64)
    edu_max = np.full(n_pos, -1, dtype=np.int64)
    np.minimum.at(edu_min, cols.position[idx], cols.education_rank[idx])
    np.maximum.at(edu_max, cols.position[idx], cols.education_rank[idx])
    exp_min = np.full(n_pos, 8, dtype=np.int64)
    exp_max = np.full(n_pos, -1, dtype=np.int64)
    np.minimum.at(exp_min, cols.position[idx], cols.experience_rank[idx])
    np.maximum.at(exp_max, cols.position[idx], cols.experience_rank[idx])

    sal_ok = idx[~np.isnan(cols.midpoint[idx])]
    sal_min = np.full(n_pos, np.inf)
    sal_max = np.full(n_pos, -np.inf)
    np.minimum.at(sal_min, cols.position[sal_ok], cols.annual_lower[sal_ok])
    np.maximum.at(sal_max, cols.position[sal_ok], cols.annual_upper[sal_ok])

    blocks = tuple(
        PositionBlock(
            position_id=cols.positions[p],
            education_rank_min=int(edu_min[p]),
            education_rank_max=int(edu_max[p]),
            experience_rank_min=int(exp_min[p]),
            experience_rank_max=int(exp_max[p]),
            salary_min=int(sal_min[p]) if np.isfinite(sal_min[p]) else None,
            salary_max=int(sal_max[p]) if np.isfinite(sal_max[p]) else None,
            record_count=int(counts[p]),
        )
        for p in np.nonzero(counts)[0]
    )

    total = len(blocks)
    edu_presence = (
        np.bincount(cols.position[idx] * 8 + cols.education_rank[idx], minlength=n_pos * 8)
        .reshape(n_pos, 8)
        > 0
    ).sum(axis=0)
    exp_presence = (
        np.bincount(cols.position[idx] * 8 + cols.experience_rank[idx], minlength=n_pos * 8)
        .reshape(n_pos, 8)
        > 0
    ).sum(axis=0)
    education_bands = {
        EDUCATION_ORDER[r]: int(edu_presence[r]) / total for r in range(8) if edu_presence[r]
    }
    experience_bands = {
        EXPERIENCE_ORDER[r]: int(exp_presence[r]) / total for r in range(8) if exp_presence[r]
    }
    return BandDistribution(blocks, education_bands, experience_bands)


# --- B1: industry-region grid -----------------------------------------------


@dataclass(frozen=True)
class GridCell:
    industry_id: str
    province: str
    record_count: int
    opacity: float


@dataclass(frozen=True)
class RankedGrid:
    industry_order: tuple[str, ...]
    province_order: tuple[str, ...]
    cells: tuple[GridCell, ...]

    def to_payload(self) -> dict:
        return {
            "industry_order": list(self.industry_order),
            "province_order": list(self.province_order),
            "cells": [
                {
                    "industry": c.industry_id,
                    "province": c.province,
                    "record_count": c.record_count,
                    "opacity": c.opacity,
                }
                for c in self.cells
            ],
        }


def _salary_rank_order(
    codes: np.ndarray, means: np.ndarray, has: np.ndarray
) -> list[int]:
    """Descending by average; entities with no salary data sort last; ties
    break by code (= identifier) ascending."""
    return sorted(
        codes.tolist(), key=lambda c: (not has[c], -means[c] if has[c] else 0.0, c)
    )


def industry_region_grid(snapshot: DatasetSnapshot, state: FilterState) -> RankedGrid:
    """Industries and provinces ranked by average salary, with record-count
    cells whose opacity is relative to the densest cell."""
    idx = match_array(snapshot, state)
    cols = snapshot.columns
    n_ind = len(cols.industries)
    n_prov = len(cols.provinces)
    cells = np.bincount(
        cols.industry[idx].astype(np.int64) * n_prov + cols.province[idx],
        minlength=n_ind * n_prov,
    ).reshape(n_ind, n_prov)

    ind_means, ind_has = _grouped_average(cols.industry[idx], cols.midpoint[idx], n_ind)
    prov_means, prov_has = _grouped_average(cols.province[idx], cols.midpoint[idx], n_prov)

    ind_codes = np.nonzero(cells.sum(axis=1))[0]
    prov_codes = np.nonzero(cells.sum(axis=0))[0]
    ind_order = _salary_rank_order(ind_codes, ind_means, ind_has)
    prov_order = _salary_rank_order(prov_codes, prov_means, prov_has)

    max_count = int(cells.max()) if len(idx) else 0
    out_cells = []
    for i in ind_order:
        for p in prov_order:
            count = int(cells[i, p])
            if count:
                out_cells.append(
                    GridCell(
                        industry_id=cols.industries[i],
                        province=cols.provinces[p],
                        record_count=count,
                        opacity=count / max_count,
                    )
                )
    return RankedGrid(
        industry_order=tuple(cols.industries[i] for i in ind_order),
        province_order=tuple(cols.provinces[p] for p in prov_order),
        cells=tuple(out_cells),
    )


# --- B2: industry flower glyphs ----------------------------------------------


@dataclass(frozen=True)
class Flower:
    industry_id: str
    x: float
    y: float
    record_count: int
    education_petal: float | None
    experience_petal: float | None
    salary_petal: float | None


@dataclass(frozen=True)
class FlowerSet:
    flowers: tuple[Flower, ...]

    def to_payload(self) -> dict:
        return {
            "industries": [
                {
                    "industry": f.industry_id,
                    "x": f.x,
                    "y": f.y,
                    "record_count": f.record_count,
                    "education_petal": f.education_petal,
                    "experience_petal": f.experience_petal,
                    "salary_petal": f.salary_petal,
                }
                for f in self.flowers
            ]
        }


def industry_flowers(snapshot: DatasetSnapshot, state: FilterState) -> FlowerSet:
    """Per-industry glyph data: x/y are the high-education and
    high-experience record fractions, petals are min-max-normalized means
    of education rank, experience rank and annual salary. A petal with no
    underlying data is None (rendered gray)."""
    idx = match_array(snapshot, state)
    cols = snapshot.columns
    n_ind = len(cols.industries)
    counts = np.bincount(cols.industry[idx], minlength=n_ind)
    present = counts > 0

    edu_sums = np.bincount(
        cols.industry[idx], weights=cols.education_rank[idx], minlength=n_ind
    )
    exp_sums = np.bincount(
        cols.industry[idx], weights=cols.experience_rank[idx], minlength=n_ind
    )
    high_edu = np.bincount(
        cols.industry[idx[cols.education_rank[idx] >= _EDU_HIGH_RANK]], minlength=n_ind
    )
    high_exp = np.bincount(
        cols.industry[idx[cols.experience_rank[idx] >= _EXP_HIGH_RANK]], minlength=n_ind
    )
    sal_means, sal_has = _grouped_average(cols.industry[idx], cols.midpoint[idx], n_ind)

    safe = np.maximum(counts, 1)
    edu_petals = _minmax_or_zero(edu_sums / safe, present)
    exp_petals = _minmax_or_zero(exp_sums / safe, present)
    sal_petals = _minmax_or_zero(sal_means, sal_has)

    flowers = tuple(
        Flower(
            industry_id=cols.industries[i],
            x=int(high_edu[i]) / int(counts[i]),
            y=int(high_exp[i]) / int(counts[i]),
            record_count=int(counts[i]),
            education_petal=float(edu_petals[i]),
            experience_petal=float(exp_petals[i]),
            salary_petal=float(sal_petals[i]) if sal_has[i] else None,
        )
        for i in np.nonzero(present)[0]
    )
    return FlowerSet(flowers)


# --- B3: regional treemap -----------------------------------------------------


class TreemapLevel(str, Enum):
    PROVINCE = "PROVINCE"
    CITY = "CITY"


TREEMAP_ROOT = "ALL"
DONUT_TOP_N = 5


@dataclass(frozen=True)
class TreemapNode:
    region: str
    posting_count: int
    salary_opacity: float
    top_positions: tuple[tuple[str, float], ...]
    top_industries: tuple[tuple[str, float], ...]
    other_positions: float
    other_industries: float
    children: tuple["TreemapNode", ...]

    @property
    def inner_opacity(self) -> float:
        return self.salary_opacity

    def to_payload(self) -> dict:
        return {
            "region": self.region,
            "posting_count": self.posting_count,
            "salary_opacity": self.salary_opacity,
            "inner_opacity": self.inner_opacity,
            "top_positions": [{"id": i, "fraction": f} for i, f in self.top_positions],
            "top_industries": [{"id": i, "fraction": f} for i, f in self.top_industries],
            "other_positions": self.other_positions,
            "other_industries": self.other_industries,
            "children": [c.to_payload() for c in self.children],
        }


def _donut(counts: np.ndarray, values: list[str]) -> tuple[tuple[tuple[str, float], ...], float]:
    """Top-N share list plus the remainder; fractions sum to 1 for any
    non-empty count vector. Ties break by identifier (= code) ascending."""
    total = int(counts.sum())
    if not total:
        return (), 0.0
    nz = np.nonzero(counts)[0]
    top = nz[np.lexsort((nz, -counts[nz]))][:DONUT_TOP_N]
    fractions = tuple((values[c], int(counts[c]) / total) for c in top.tolist())
    other = max(0.0, 1.0 - sum(f for _, f in fractions))
    return fractions, other


class _TreemapData:
    """Matched-subset aggregates shared by every node of one treemap call."""

    def __init__(self, snapshot: DatasetSnapshot, idx: np.ndarray) -> None:
        cols = snapshot.columns
        self.cols = cols
        n_prov = len(cols.provinces)
        n_city = len(cols.cities)
        n_pos = len(cols.positions)
        n_ind = len(cols.industries)

        self.prov_counts = np.bincount(cols.province[idx], minlength=n_prov)
        self.city_counts = np.bincount(cols.city[idx], minlength=n_city)
        self.prov_means, self.prov_has = _grouped_average(
            cols.province[idx], cols.midpoint[idx], n_prov
        )
        self.city_means, self.city_has = _grouped_average(
            cols.city[idx], cols.midpoint[idx], n_city
        )
        self.prov_opacity = _minmax_or_zero(self.prov_means, self.prov_has)

        self.prov_pos = np.bincount(
            cols.province[idx].astype(np.int64) * n_pos + cols.position[idx],
            minlength=n_prov * n_pos,
        ).reshape(n_prov, n_pos)
        self.prov_ind = np.bincount(
            cols.province[idx].astype(np.int64) * n_ind + cols.industry[idx],
            minlength=n_prov * n_ind,
        ).reshape(n_prov, n_ind)
        self.city_pos = np.bincount(
            cols.city[idx].astype(np.int64) * n_pos + cols.position[idx],
            minlength=n_city * n_pos,
        ).reshape(n_city, n_pos)
        self.city_ind = np.bincount(
            cols.city[idx].astype(np.int64) * n_ind + cols.industry[idx],
            minlength=n_city * n_ind,
        ).reshape(n_city, n_ind)

    def city_nodes(self, province_code: int) -> tuple[TreemapNode, ...]:
        cols = self.cols
        cities = np.nonzero(
            (cols.city_province == province_code) & (self.city_counts > 0)
        )[0]
        # opacity normalized within this sibling group
        opacity = np.zeros(len(cols.cities))
        if len(cities):
            group = _minmax_or_zero(
                self.city_means[cities], self.city_has[cities]
            )
            opacity[cities] = group
        nodes = []
        for c in cities.tolist():
            top_pos, other_pos = _donut(self.city_pos[c], cols.positions)
            top_ind, other_ind = _donut(self.city_ind[c], cols.industries)
            nodes.append(
                TreemapNode(
                    region=cols.cities[c],
                    posting_count=int(self.city_counts[c]),
                    salary_opacity=float(opacity[c]),
                    top_positions=top_pos,
                    top_industries=top_ind,
                    other_positions=other_pos,
                    other_industries=other_ind,
                    children=(),
                )
            )
        return tuple(nodes)

    def province_node(self, province_code: int, opacity: float) -> TreemapNode:
        cols = self.cols
        top_pos, other_pos = _donut(self.prov_pos[province_code], cols.positions)
        top_ind, other_ind = _donut(self.prov_ind[province_code], cols.industries)
        return TreemapNode(
            region=cols.provinces[province_code],
            posting_count=int(self.prov_counts[province_code]),
            salary_opacity=opacity,
            top_positions=top_pos,
            top_industries=top_ind,
            other_positions=other_pos,
            other_industries=other_ind,
            children=self.city_nodes(province_code),
        )


def regional_treemap(
    snapshot: DatasetSnapshot,
    state: FilterState,
    level: TreemapLevel = TreemapLevel.PROVINCE,
    parent: str | None = None,
) -> TreemapNode:
    """Nested region profile. PROVINCE level returns a root spanning the
    matched subset with province children (each containing its cities);
    CITY level returns one province with its city children. Salary
    opacities are normalized within each sibling group; regions with no
    matched records are omitted."""
    cols = snapshot.columns

    if level is TreemapLevel.CITY:
        if parent is None:
            raise ValueError("CITY level requires a parent province")
        if parent not in cols.provinces:
            raise UnknownRegionError(f"unknown province: {parent!r}")
        idx = match_array(snapshot, state)
        data = _TreemapData(snapshot, idx)
        code = cols.provinces.index(parent)
        # this node is the root of its response: full opacity when it has
        # salary data at all, zero otherwise
        opacity = 1.0 if data.prov_has[code] else 0.0
        return data.province_node(code, opacity)

    idx = match_array(snapshot, state)
    data = _TreemapData(snapshot, idx)
    children = tuple(
        data.province_node(p, float(data.prov_opacity[p]))
        for p in np.nonzero(data.prov_counts)[0]
    )
    total_pos = np.bincount(cols.position[idx], minlength=len(cols.positions))
    total_ind = np.bincount(cols.industry[idx], minlength=len(cols.industries))
    top_pos, other_pos = _donut(total_pos, cols.positions)
    top_ind, other_ind = _donut(total_ind, cols.industries)
    has_salary = bool((~np.isnan(cols.midpoint[idx])).any())
    return TreemapNode(
        region=TREEMAP_ROOT,
        posting_count=int(len(idx)),
        salary_opacity=1.0 if has_salary else 0.0,
        top_positions=top_pos,
        top_industries=top_ind,
        other_positions=other_pos,
        other_industries=other_ind,
        children=children,
    )
