"""Employment classification, annualization, tiers and ordinal ranks."""

from __future__ import annotations

import numpy as np
import pytest

from recruitlens.codes import (
    EDUCATION_ORDER,
    EXPERIENCE_ORDER,
    EducationTier,
    EmploymentClass,
    ExperienceTier,
    SalaryKind,
    SalaryType,
)
from recruitlens.normalize import (
    annual_factor,
    annualize,
    classify_employment,
    education_tier,
    experience_tier,
    normalize_record,
    ordinal_rank,
    salary_midpoint,
)

from conftest import make_record

CONVERTIBLE = [
    (SalaryType(SalaryKind.YEARLY), 1),
    (SalaryType(SalaryKind.MONTHLY), 12),
    (SalaryType(SalaryKind.MONTHLY_WITH_BONUS, 1), 13),
    (SalaryType(SalaryKind.MONTHLY_WITH_BONUS, 3), 15),
    (SalaryType(SalaryKind.WEEKLY), 52),
    (SalaryType(SalaryKind.DAILY), 261),
    (SalaryType(SalaryKind.HOURLY), 2088),
]


def test_classification():
    assert classify_employment(SalaryType(SalaryKind.MONTHLY)) is EmploymentClass.PERMANENT
    assert classify_employment(SalaryType(SalaryKind.YEARLY)) is EmploymentClass.PERMANENT
    assert (
        classify_employment(SalaryType(SalaryKind.MONTHLY_WITH_BONUS, 2))
        is EmploymentClass.PERMANENT
    )
    assert classify_employment(SalaryType(SalaryKind.HOURLY)) is EmploymentClass.FLEXIBLE
    assert classify_employment(SalaryType(SalaryKind.WEEKLY)) is EmploymentClass.FLEXIBLE
    assert classify_employment(SalaryType(SalaryKind.DAILY)) is EmploymentClass.FLEXIBLE
    assert classify_employment(SalaryType(SalaryKind.NEGOTIABLE)) is None


def test_annualize_examples():
    assert annualize(SalaryType(SalaryKind.MONTHLY_WITH_BONUS, 1), 10_000, 10_000) == (
        130_000,
        130_000,
    )
    assert annualize(SalaryType(SalaryKind.HOURLY), 50, 60) == (104_400, 125_280)
    assert annualize(SalaryType(SalaryKind.YEARLY), 80_000, 150_000) == (80_000, 150_000)


def test_negotiable_has_no_conversion():
    with pytest.raises(ValueError, match="no convertible salary"):
        annualize(SalaryType(SalaryKind.NEGOTIABLE), 0, 0)


@pytest.mark.parametrize("salary_type,factor", CONVERTIBLE)
def test_factor_consistency(salary_type, factor):
    assert annual_factor(salary_type) == factor
    assert annualize(salary_type, 1, 1) == (factor, factor)


@pytest.mark.parametrize("salary_type,factor", CONVERTIBLE)
def test_annualize_monotonic(salary_type, factor):
    rng = np.random.default_rng(3)
    for _ in range(50):
        lo, hi = sorted(int(v) for v in rng.integers(0, 1_000_000, 2))
        a = annualize(salary_type, lo, hi)
        b = annualize(salary_type, lo + 1, hi + 1)
        assert b[0] > a[0] and b[1] > a[1]


def test_education_tiers_total():
    expected = {
        "Gh": EducationTier.HIGH,
        "Go": EducationTier.HIGH,
        "GP": EducationTier.HIGH,
        "GI": EducationTier.MEDIUM,
        "Gy": EducationTier.MEDIUM,
        "Gx": EducationTier.MEDIUM,
        "GZ": EducationTier.LOW,
        "Gz": EducationTier.LOW,
    }
    assert set(expected) == set(EDUCATION_ORDER)
    for code, tier in expected.items():
        assert education_tier(code) is tier
    with pytest.raises(ValueError):
        education_tier("G9")


def test_experience_tiers_total():
    expected = {
        "ESu": ExperienceTier.HIGH,
        "Eby": ExperienceTier.HIGH,
        "EzN": ExperienceTier.HIGH,
        "EaZ": ExperienceTier.HIGH,
        "EdD": ExperienceTier.LOW,
        "Eqh": ExperienceTier.LOW,
        "Eas": ExperienceTier.LOW,
        "EKk": ExperienceTier.LOW,
    }
    assert set(expected) == set(EXPERIENCE_ORDER)
    for code, tier in expected.items():
        assert experience_tier(code) is tier
    with pytest.raises(ValueError):
        experience_tier("E00")


def test_ordinal_ranks():
    assert ordinal_rank("Gz") == 0
    assert ordinal_rank("Gh") == 7
    assert ordinal_rank("Gy") == 3
    assert ordinal_rank("ESu") == 7
    assert ordinal_rank("EKk") == 0
    assert sorted(ordinal_rank(c) for c in EDUCATION_ORDER) == list(range(8))
    assert sorted(ordinal_rank(c) for c in EXPERIENCE_ORDER) == list(range(8))
    with pytest.raises(ValueError):
        ordinal_rank("??")


def test_rank_tier_coherence():
    for code in EDUCATION_ORDER:
        assert (ordinal_rank(code) >= ordinal_rank("GP")) == (
            education_tier(code) is EducationTier.HIGH
        )
    for code in EXPERIENCE_ORDER:
        assert (ordinal_rank(code) >= ordinal_rank("EaZ")) == (
            experience_tier(code) is ExperienceTier.HIGH
        )


def test_salary_midpoint():
    assert salary_midpoint(80_000, 150_000) == 115_000
    assert salary_midpoint(42, 42) == 42
    rng = np.random.default_rng(11)
    for _ in range(200):
        lo, hi = sorted(rng.uniform(0, 1e6, 2))
        assert salary_midpoint(lo, hi) == pytest.approx(float(np.mean([lo, hi])), abs=1e-9)


def test_normalize_record_permanent():
    record = make_record(salary_type="MONTHLY+1", lower_bound=10_000, upper_bound=10_000)
    n = normalize_record(record)
    assert n.employment_class is EmploymentClass.PERMANENT
    assert (n.annual_lower, n.annual_upper) == (130_000, 130_000)
    assert n.annual_midpoint == 130_000
    assert n.annual_lower <= n.annual_midpoint <= n.annual_upper
    assert n.education_tier is EducationTier.HIGH
    assert n.experience_tier is ExperienceTier.LOW
    assert (n.education_rank, n.experience_rank) == (5, 3)


def test_normalize_record_negotiable():
    record = make_record(salary_type="NEGOTIABLE", lower_bound=0, upper_bound=0)
    n = normalize_record(record)
    assert n.employment_class is None
    assert n.annual_lower is None and n.annual_upper is None and n.annual_midpoint is None
