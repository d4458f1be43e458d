"""The shared cross-view selection and the record-matching kernel.

A record matches a FilterState iff it matches every non-empty dimension
(AND across dimensions), where a dimension matches when the record's
value is any of the listed ones (OR within a dimension). The
education/experience pair set constrains the joint pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import EDUCATION_RANK, EXPERIENCE_RANK, EmploymentClass
from .pipeline import DatasetSnapshot


@dataclass(frozen=True)
class FilterState:
    education: frozenset[str] = frozenset()
    experience: frozenset[str] = frozenset()
    edu_exp_pairs: frozenset[tuple[str, str]] = frozenset()
    provinces: frozenset[str] = frozenset()
    cities: frozenset[str] = frozenset()
    industries: frozenset[str] = frozenset()
    positions: frozenset[str] = frozenset()
    employment_class: EmploymentClass | None = None

    def is_empty(self) -> bool:
        return not (
            self.education
            or self.experience
            or self.edu_exp_pairs
            or self.provinces
            or self.cities
            or self.industries
            or self.positions
            or self.employment_class is not None
        )


def _value_codes(values: frozenset[str], table: list[str]) -> np.ndarray:
    """Category codes for the requested values; unknown values simply
    match nothing."""
    lookup = {v: i for i, v in enumerate(table)}
    return np.array(sorted(lookup[v] for v in values if v in lookup), dtype=np.int64)


def match_array(snapshot: DatasetSnapshot, state: FilterState) -> np.ndarray:
    """Matching snapshot indices as an ascending int64 array."""
    n = len(snapshot)
    if state.is_empty():
        return np.arange(n, dtype=np.int64)

    cols = snapshot.columns
    mask = np.ones(n, dtype=bool)
    if state.positions:
        mask &= np.isin(cols.position, _value_codes(state.positions, cols.positions))
    if state.provinces:
        mask &= np.isin(cols.province, _value_codes(state.provinces, cols.provinces))
    if state.cities:
        mask &= np.isin(cols.city, _value_codes(state.cities, cols.cities))
    if state.industries:
        mask &= np.isin(cols.industry, _value_codes(state.industries, cols.industries))
    if state.education:
        ranks = np.array(sorted(EDUCATION_RANK[c] for c in state.education), dtype=np.int64)
        mask &= np.isin(cols.education_rank, ranks)
    if state.experience:
        ranks = np.array(sorted(EXPERIENCE_RANK[c] for c in state.experience), dtype=np.int64)
        mask &= np.isin(cols.experience_rank, ranks)
    if state.edu_exp_pairs:
        joint = cols.education_rank * 8 + cols.experience_rank
        wanted = np.array(
            sorted(EDUCATION_RANK[e] * 8 + EXPERIENCE_RANK[x] for e, x in state.edu_exp_pairs),
            dtype=np.int64,
        )
        mask &= np.isin(joint, wanted)
    if state.employment_class is not None:
        code = 1 if state.employment_class is EmploymentClass.PERMANENT else 2
        mask &= cols.employment == code

    return np.nonzero(mask)[0]


def match(snapshot: DatasetSnapshot, state: FilterState) -> list[int]:
    """Snapshot indices of the matching records, in stable (input) order."""
    return match_array(snapshot, state).tolist()
