"""The record-processing pipeline: long-tail position filtering,
normalization, grouped IQR outlier removal, and the immutable snapshot
all queries read.

Stage order is fixed: top-fraction filter -> normalization -> outlier
removal. Outlier fences are computed once per (province, position,
employment class) group and never re-iterated.

Snapshots carry two views of the same records: the record tuple (the
source of truth for contracts and serialization) and integer-coded
column arrays that let the aggregate layer answer queries on ~100k-row
corpora within its latency budget.
"""

from __future__ import annotations

import hashlib
import json
import math
from collections import Counter, defaultdict
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .codes import EmploymentClass, SalaryKind, SalaryType, parse_salary_type
from .ingest import RecruitmentRecord
from .normalize import NormalizedRecord, normalize_records

SNAPSHOT_FORMAT = "recruitlens.snapshot"
SNAPSHOT_VERSION = 1

# Smallest group that gets fenced: with linear-interpolation quartiles,
# n = 4 is the first size where Q1 and Q3 can differ.
MIN_FENCE_GROUP = 4

INDEX_DIMENSIONS = (
    "position",
    "province",
    "city",
    "industry",
    "education",
    "experience",
    "employment_class",
)


class PipelineError(Exception):
    """The pipeline cannot produce a usable snapshot."""


@dataclass(frozen=True)
class QuartilePair:
    q1: float
    q3: float


@dataclass(frozen=True)
class OutlierBounds:
    lower: float
    upper: float


def _interpolated(sorted_values: Sequence[float], p: float) -> float:
    """Percentile by linear interpolation between closest ranks: the value
    at fractional index p * (n - 1) of the ascending-sorted list."""
    pos = p * (len(sorted_values) - 1)
    lo = math.floor(pos)
    hi = math.ceil(pos)
    if lo == hi:
        return float(sorted_values[lo])
    frac = pos - lo
    return sorted_values[lo] * (1.0 - frac) + sorted_values[hi] * frac


def quartiles(values: Sequence[float]) -> QuartilePair:
    if not values:
        raise ValueError("quartiles of an empty list")
    ordered = sorted(values)
    return QuartilePair(_interpolated(ordered, 0.25), _interpolated(ordered, 0.75))


def iqr_bounds(values: Sequence[float]) -> OutlierBounds:
    """Fences at Q1 - 1.5*IQR and Q3 + 1.5*IQR."""
    q = quartiles(values)
    iqr = q.q3 - q.q1
    return OutlierBounds(q.q1 - 1.5 * iqr, q.q3 + 1.5 * iqr)


def top_percent_positions(
    records: Sequence[RecruitmentRecord], fraction: float
) -> frozenset[str]:
    """Positions ranked by record count descending, cut at rank
    ceil(fraction * distinct positions); ties at the cutoff count are all
    kept, so the result may exceed the nominal size."""
    if not 0 < fraction <= 1:
        raise ValueError(f"fraction must be in (0, 1], got {fraction}")
    if not records:
        raise ValueError("no records to rank")
    counts = Counter(r.position_id for r in records)
    ordered = sorted(counts.values(), reverse=True)
    cutoff_rank = math.ceil(fraction * len(counts))
    cutoff = ordered[cutoff_rank - 1]
    return frozenset(pid for pid, count in counts.items() if count >= cutoff)


def remove_outliers(
    records: Sequence[NormalizedRecord],
) -> tuple[list[NormalizedRecord], list[NormalizedRecord]]:
    """Single-pass IQR fencing of annual salary midpoints within each
    (province, position, employment class) group.

    Groups smaller than MIN_FENCE_GROUP are kept whole; negotiable-salary
    records have no class and bypass fencing entirely. Kept records stay
    in input order.
    """
    groups: dict[tuple[str, str, str], list[int]] = defaultdict(list)
    for i, record in enumerate(records):
        if record.employment_class is None:
            continue
        groups[(record.province, record.position_id, record.employment_class.value)].append(i)

    removed_idx: set[int] = set()
    for indices in groups.values():
        if len(indices) < MIN_FENCE_GROUP:
            continue
        midpoints = [records[i].annual_midpoint for i in indices]
        bounds = iqr_bounds(midpoints)
        for i in indices:
            midpoint = records[i].annual_midpoint
            if midpoint < bounds.lower or midpoint > bounds.upper:
                removed_idx.add(i)

    kept = [r for i, r in enumerate(records) if i not in removed_idx]
    removed = [records[i] for i in sorted(removed_idx)]
    return kept, removed


@dataclass(frozen=True)
class Provenance:
    """Record counts after each pipeline stage."""

    ingested: int
    after_position_filter: int
    after_outlier_removal: int

    def as_dict(self) -> dict[str, int]:
        return {
            "ingested": self.ingested,
            "after_position_filter": self.after_position_filter,
            "after_outlier_removal": self.after_outlier_removal,
        }


# Flexible wage kinds in column encoding order.
WAGE_KINDS = (SalaryKind.WEEKLY, SalaryKind.DAILY, SalaryKind.HOURLY)
_WAGE_CODE = {kind: i for i, kind in enumerate(WAGE_KINDS)}


class SnapshotColumns:
    """Integer-coded columns over the snapshot records.

    Category code order follows the sorted value lists, so code order and
    identifier order agree (deterministic tie-breaks fall out for free).
    Salary columns hold NaN where a record carries no annual figures.
    """

    def __init__(self, records: Sequence[NormalizedRecord]) -> None:
        n = len(records)
        self.positions = sorted({r.position_id for r in records})
        self.provinces = sorted({r.province for r in records})
        self.cities = sorted({r.city for r in records})
        self.industries = sorted({r.industry_id for r in records})
        self.companies = sorted({r.company_id for r in records})
        pos_of = {v: i for i, v in enumerate(self.positions)}
        prov_of = {v: i for i, v in enumerate(self.provinces)}
        city_of = {v: i for i, v in enumerate(self.cities)}
        ind_of = {v: i for i, v in enumerate(self.industries)}
        comp_of = {v: i for i, v in enumerate(self.companies)}

        self.position = np.empty(n, dtype=np.int32)
        self.province = np.empty(n, dtype=np.int32)
        self.city = np.empty(n, dtype=np.int32)
        self.industry = np.empty(n, dtype=np.int32)
        self.company = np.empty(n, dtype=np.int32)
        self.education_rank = np.empty(n, dtype=np.int64)
        self.experience_rank = np.empty(n, dtype=np.int64)
        # 0 = no class (negotiable), 1 = permanent, 2 = flexible
        self.employment = np.zeros(n, dtype=np.int8)
        self.wage_kind = np.full(n, -1, dtype=np.int8)
        self.bonus_months = np.zeros(n, dtype=np.int16)
        self.midpoint = np.full(n, np.nan)
        self.annual_lower = np.full(n, np.nan)
        self.annual_upper = np.full(n, np.nan)
        self.monthly_salary = np.full(n, np.nan)
        self.jitter = np.empty(n)

        for i, r in enumerate(records):
            self.position[i] = pos_of[r.position_id]
            self.province[i] = prov_of[r.province]
            self.city[i] = city_of[r.city]
            self.industry[i] = ind_of[r.industry_id]
            self.company[i] = comp_of[r.company_id]
            self.education_rank[i] = r.education_rank
            self.experience_rank[i] = r.experience_rank
            self.jitter[i] = _jitter_key(i, r.position_id)
            if r.employment_class is None:
                continue
            self.midpoint[i] = r.annual_midpoint
            self.annual_lower[i] = r.annual_lower
            self.annual_upper[i] = r.annual_upper
            if r.employment_class is EmploymentClass.PERMANENT:
                self.employment[i] = 1
                self.bonus_months[i] = r.salary_type.bonus_months
                quoted = (r.lower_bound + r.upper_bound) / 2
                self.monthly_salary[i] = (
                    quoted / 12 if r.salary_type.kind is SalaryKind.YEARLY else quoted
                )
            else:
                self.employment[i] = 2
                self.wage_kind[i] = _WAGE_CODE[r.salary_type.kind]

        # province code of each city code (city ids embed their province)
        self.city_province = np.array(
            [prov_of[city[0]] for city in self.cities], dtype=np.int32
        )


def _jitter_key(index: int, position_id: str) -> float:
    """Deterministic per-record jitter in [0, 1); stable across processes
    and hash seeds, unlike the built-in salted hash()."""
    digest = hashlib.md5(f"{index}:{position_id}".encode("utf-8")).hexdigest()
    return int(digest[:8], 16) / 0x100000000


class DatasetSnapshot:
    """Immutable post-pipeline corpus plus per-dimension inverted indexes.

    Safe to share across concurrent readers: records are a tuple, indexes
    are built once at construction and only handed out read-only.
    """

    def __init__(
        self,
        records: Sequence[NormalizedRecord],
        fraction: float,
        provenance: Provenance,
    ) -> None:
        self._records: tuple[NormalizedRecord, ...] = tuple(records)
        self._fraction = fraction
        self._provenance = provenance
        self._indexes = self._build_indexes(self._records)
        self._columns = SnapshotColumns(self._records)
        cities: dict[str, set[str]] = defaultdict(set)
        for r in self._records:
            cities[r.province].add(r.city)
        self._city_counts = {province: len(group) for province, group in cities.items()}

    @staticmethod
    def _build_indexes(
        records: tuple[NormalizedRecord, ...],
    ) -> dict[str, dict[str, tuple[int, ...]]]:
        raw: dict[str, dict[str, list[int]]] = {
            dim: defaultdict(list) for dim in INDEX_DIMENSIONS
        }
        for i, r in enumerate(records):
            raw["position"][r.position_id].append(i)
            raw["province"][r.province].append(i)
            raw["city"][r.city].append(i)
            raw["industry"][r.industry_id].append(i)
            raw["education"][r.education].append(i)
            raw["experience"][r.experience].append(i)
            if r.employment_class is not None:
                raw["employment_class"][r.employment_class.value].append(i)
        return {
            dim: {value: tuple(ids) for value, ids in index.items()}
            for dim, index in raw.items()
        }

    @property
    def records(self) -> tuple[NormalizedRecord, ...]:
        return self._records

    @property
    def fraction(self) -> float:
        return self._fraction

    @property
    def provenance(self) -> Provenance:
        return self._provenance

    def index(self, dimension: str) -> Mapping[str, tuple[int, ...]]:
        return self._indexes[dimension]

    @property
    def columns(self) -> SnapshotColumns:
        return self._columns

    def city_count(self, province: str) -> int:
        """Distinct cities of a province present in the snapshot."""
        return self._city_counts.get(province, 0)

    def __len__(self) -> int:
        return len(self._records)


def build_snapshot(
    records: Sequence[RecruitmentRecord], fraction: float = 0.01
) -> DatasetSnapshot:
    """Run the full pipeline over validated records and freeze the result."""
    top = top_percent_positions(records, fraction)
    filtered = [r for r in records if r.position_id in top]
    normalized = normalize_records(filtered)
    kept, _removed = remove_outliers(normalized)
    if not kept:
        raise PipelineError("pipeline produced empty snapshot")
    provenance = Provenance(
        ingested=len(records),
        after_position_filter=len(filtered),
        after_outlier_removal=len(kept),
    )
    return DatasetSnapshot(kept, fraction, provenance)


# --- snapshot cache -------------------------------------------------------
#
# Cache layout: versioned header, the raw fields of every surviving record
# (derived fields are recomputed on load), and the provenance block. The
# byte stream is canonical, so identical inputs give identical caches.

_RECORD_FIELDS = (
    "position_id",
    "province",
    "city",
    "salary_type",
    "salary_base",
    "lower_bound",
    "upper_bound",
    "company",
    "industry",
    "education",
    "experience",
)


def _record_row(r: NormalizedRecord) -> list:
    return [
        r.position_id,
        r.province,
        r.city,
        r.salary_type.encode(),
        r.salary_base or "",
        r.lower_bound,
        r.upper_bound,
        r.company_id,
        r.industry_id,
        r.education,
        r.experience,
    ]


def snapshot_to_bytes(snapshot: DatasetSnapshot) -> bytes:
    payload = {
        "format": SNAPSHOT_FORMAT,
        "version": SNAPSHOT_VERSION,
        "fraction": snapshot.fraction,
        "provenance": snapshot.provenance.as_dict(),
        "fields": list(_RECORD_FIELDS),
        "records": [_record_row(r) for r in snapshot.records],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("utf-8")


def snapshot_from_bytes(data: bytes) -> DatasetSnapshot:
    try:
        payload = json.loads(data)
    except json.JSONDecodeError as exc:
        raise PipelineError(f"snapshot cache is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("format") != SNAPSHOT_FORMAT:
        raise PipelineError("not a snapshot cache file")
    if payload.get("version") != SNAPSHOT_VERSION:
        raise PipelineError(f"unsupported snapshot version: {payload.get('version')!r}")

    records = []
    for row in payload["records"]:
        (
            position_id,
            province,
            city,
            salary_type,
            salary_base,
            lower_bound,
            upper_bound,
            company,
            industry,
            education,
            experience,
        ) = row
        records.append(
            RecruitmentRecord(
                position_id=position_id,
                province=province,
                city=city,
                salary_type=_parse_cached_salary_type(salary_type),
                salary_base=salary_base or None,
                lower_bound=lower_bound,
                upper_bound=upper_bound,
                company_id=company,
                industry_id=industry,
                education=education,
                experience=experience,
            )
        )
    provenance = Provenance(**payload["provenance"])
    return DatasetSnapshot(normalize_records(records), payload["fraction"], provenance)


def _parse_cached_salary_type(text: str) -> SalaryType:
    try:
        return parse_salary_type(text)
    except ValueError as exc:
        raise PipelineError(f"corrupt snapshot cache: {exc}") from exc


def save_snapshot(snapshot: DatasetSnapshot, path: str | Path) -> None:
    Path(path).write_bytes(snapshot_to_bytes(snapshot))


def load_snapshot(path: str | Path) -> DatasetSnapshot:
    return snapshot_from_bytes(Path(path).read_bytes())
