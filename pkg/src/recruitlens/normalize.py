"""Record enrichment: employment classification, annualized salary bounds,
requirement tiers and ordinal ranks.

All operations are pure; NEGOTIABLE postings classify to no employment
class and carry no annual figures, which downstream salary aggregates
treat as "excluded".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .codes import (
    EDUCATION_RANK,
    EDUCATION_TIERS,
    EXPERIENCE_RANK,
    EXPERIENCE_TIERS,
    EducationTier,
    EmploymentClass,
    ExperienceTier,
    SalaryKind,
    SalaryType,
)
from .ingest import RecruitmentRecord

# Periods per year. Daily and hourly factors follow the statutory
# 21.75 working days and 174 working hours per month.
PERIODS_PER_YEAR: dict[SalaryKind, int] = {
    SalaryKind.YEARLY: 1,
    SalaryKind.MONTHLY: 12,
    SalaryKind.WEEKLY: 52,
    SalaryKind.DAILY: 261,
    SalaryKind.HOURLY: 2088,
}


def annual_factor(salary_type: SalaryType) -> int:
    """Periods per year for a convertible salary type."""
    if salary_type.kind is SalaryKind.NEGOTIABLE:
        raise ValueError("no convertible salary")
    if salary_type.kind is SalaryKind.MONTHLY_WITH_BONUS:
        return 12 + salary_type.bonus_months
    return PERIODS_PER_YEAR[salary_type.kind]


def classify_employment(salary_type: SalaryType) -> EmploymentClass | None:
    """Permanent for yearly/monthly quotes, flexible for weekly/daily/hourly,
    None for negotiable postings (excluded from salary analytics)."""
    kind = salary_type.kind
    if kind in (SalaryKind.YEARLY, SalaryKind.MONTHLY, SalaryKind.MONTHLY_WITH_BONUS):
        return EmploymentClass.PERMANENT
    if kind in (SalaryKind.WEEKLY, SalaryKind.DAILY, SalaryKind.HOURLY):
        return EmploymentClass.FLEXIBLE
    return None


def annualize(salary_type: SalaryType, lower: int, upper: int) -> tuple[int, int]:
    """Convert period-quoted bounds to CNY/year by the period factor."""
    if lower > upper:
        raise ValueError("bounds inverted")
    if lower < 0:
        raise ValueError("negative amount")
    factor = annual_factor(salary_type)
    return lower * factor, upper * factor


def education_tier(code: str) -> EducationTier:
    try:
        return EDUCATION_TIERS[code]
    except KeyError:
        raise ValueError(f"unknown education code: {code!r}") from None


def experience_tier(code: str) -> ExperienceTier:
    try:
        return EXPERIENCE_TIERS[code]
    except KeyError:
        raise ValueError(f"unknown experience code: {code!r}") from None


def ordinal_rank(code: str) -> int:
    """Rank 0-7 within the code's own dimension; the education and
    experience code families are disjoint, so one lookup serves both."""
    rank = EDUCATION_RANK.get(code)
    if rank is None:
        rank = EXPERIENCE_RANK.get(code)
    if rank is None:
        raise ValueError(f"unknown requirement code: {code!r}")
    return rank


def salary_midpoint(annual_lower: float, annual_upper: float) -> float:
    """Single salary scalar used by averages, tiers and percentiles."""
    if annual_lower > annual_upper:
        raise ValueError("bounds inverted")
    return (annual_lower + annual_upper) / 2


@dataclass(frozen=True)
class NormalizedRecord:
    """A validated posting enriched with the derived analytic fields.

    ``employment_class`` and the annual figures are None exactly when the
    posting's salary is negotiable.
    """

    position_id: str
    province: str
    city: str
    salary_type: SalaryType
    salary_base: str | None
    lower_bound: int
    upper_bound: int
    company_id: str
    industry_id: str
    education: str
    experience: str
    employment_class: EmploymentClass | None
    annual_lower: int | None
    annual_upper: int | None
    annual_midpoint: float | None
    education_tier: EducationTier
    experience_tier: ExperienceTier
    education_rank: int
    experience_rank: int


def normalize_record(record: RecruitmentRecord) -> NormalizedRecord:
    employment = classify_employment(record.salary_type)
    if employment is None:
        annual_lower = annual_upper = None
        midpoint = None
    else:
        annual_lower, annual_upper = annualize(
            record.salary_type, record.lower_bound, record.upper_bound
        )
        midpoint = salary_midpoint(annual_lower, annual_upper)
    return NormalizedRecord(
        position_id=record.position_id,
        province=record.province,
        city=record.city,
        salary_type=record.salary_type,
        salary_base=record.salary_base,
        lower_bound=record.lower_bound,
        upper_bound=record.upper_bound,
        company_id=record.company_id,
        industry_id=record.industry_id,
        education=record.education,
        experience=record.experience,
        employment_class=employment,
        annual_lower=annual_lower,
        annual_upper=annual_upper,
        annual_midpoint=midpoint,
        education_tier=EDUCATION_TIERS[record.education],
        experience_tier=EXPERIENCE_TIERS[record.experience],
        education_rank=EDUCATION_RANK[record.education],
        experience_rank=EXPERIENCE_RANK[record.experience],
    )


def normalize_records(records: Iterable[RecruitmentRecord]) -> list[NormalizedRecord]:
    return [normalize_record(r) for r in records]
