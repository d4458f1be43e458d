"""Controlled vocabularies shared across the ingest, normalization and
analytics layers: requirement codes, their ordinal chains and tier
groupings, and the compensation-structure taxonomy.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

# Ascending ordinal chains; list index = rank. The two code families are
# disjoint (G* vs E*), so rank lookups can share one table.
EDUCATION_ORDER: tuple[str, ...] = ("Gz", "GZ", "Gx", "Gy", "GI", "GP", "Go", "Gh")
EXPERIENCE_ORDER: tuple[str, ...] = ("EKk", "Eas", "Eqh", "EdD", "EaZ", "EzN", "Eby", "ESu")

EDUCATION_CODES = frozenset(EDUCATION_ORDER)
EXPERIENCE_CODES = frozenset(EXPERIENCE_ORDER)

EDUCATION_RANK: dict[str, int] = {code: rank for rank, code in enumerate(EDUCATION_ORDER)}
EXPERIENCE_RANK: dict[str, int] = {code: rank for rank, code in enumerate(EXPERIENCE_ORDER)}


class EducationTier(str, Enum):
    HIGH = "HIGH"      # bachelor and above
    MEDIUM = "MEDIUM"  # secondary schooling
    LOW = "LOW"        # middle school or no requirement


class ExperienceTier(str, Enum):
    HIGH = "HIGH"  # five years and up
    LOW = "LOW"


EDUCATION_TIERS: dict[str, EducationTier] = {
    "Gh": EducationTier.HIGH,
    "Go": EducationTier.HIGH,
    "GP": EducationTier.HIGH,
    "GI": EducationTier.MEDIUM,
    "Gy": EducationTier.MEDIUM,
    "Gx": EducationTier.MEDIUM,
    "GZ": EducationTier.LOW,
    "Gz": EducationTier.LOW,
}

EXPERIENCE_TIERS: dict[str, ExperienceTier] = {
    "ESu": ExperienceTier.HIGH,
    "Eby": ExperienceTier.HIGH,
    "EzN": ExperienceTier.HIGH,
    "EaZ": ExperienceTier.HIGH,
    "EdD": ExperienceTier.LOW,
    "Eqh": ExperienceTier.LOW,
    "Eas": ExperienceTier.LOW,
    "EKk": ExperienceTier.LOW,
}


class SalaryKind(str, Enum):
    """The seven compensation structures a posting can quote."""

    YEARLY = "YEARLY"
    MONTHLY = "MONTHLY"
    MONTHLY_WITH_BONUS = "MONTHLY_WITH_BONUS"
    WEEKLY = "WEEKLY"
    DAILY = "DAILY"
    HOURLY = "HOURLY"
    NEGOTIABLE = "NEGOTIABLE"


class EmploymentClass(str, Enum):
    PERMANENT = "PERMANENT"
    FLEXIBLE = "FLEXIBLE"


FLEXIBLE_KINDS = frozenset({SalaryKind.WEEKLY, SalaryKind.DAILY, SalaryKind.HOURLY})
PERMANENT_KINDS = frozenset(
    {SalaryKind.YEARLY, SalaryKind.MONTHLY, SalaryKind.MONTHLY_WITH_BONUS}
)


@dataclass(frozen=True)
class SalaryType:
    """A compensation structure, with bonus months for 13th-month style packages."""

    kind: SalaryKind
    bonus_months: int = 0

    def __post_init__(self) -> None:
        if self.kind is SalaryKind.MONTHLY_WITH_BONUS:
            if self.bonus_months < 1:
                raise ValueError("MONTHLY_WITH_BONUS requires bonus_months >= 1")
        elif self.bonus_months:
            raise ValueError(f"{self.kind.value} does not carry bonus months")

    def encode(self) -> str:
        """Wire form used in CSV/JSONL files: ``MONTHLY``, ``MONTHLY+2``, ..."""
        if self.kind is SalaryKind.MONTHLY_WITH_BONUS:
            return f"MONTHLY+{self.bonus_months}"
        return self.kind.value


def parse_salary_type(text: str) -> SalaryType:
    """Parse the wire form of a salary type.

    Raises ValueError for anything outside the seven-value taxonomy or a
    ``MONTHLY+k`` suffix with k < 1.
    """
    if text.startswith("MONTHLY+"):
        suffix = text[len("MONTHLY+"):]
        if not suffix.isdigit() or int(suffix) < 1:
            raise ValueError(f"bad bonus month count: {text!r}")
        return SalaryType(SalaryKind.MONTHLY_WITH_BONUS, int(suffix))
    try:
        kind = SalaryKind(text)
    except ValueError:
        raise ValueError(f"unknown salary type: {text!r}") from None
    if kind is SalaryKind.MONTHLY_WITH_BONUS:
        raise ValueError("MONTHLY_WITH_BONUS requires an explicit +k suffix")
    return SalaryType(kind)
