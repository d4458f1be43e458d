"""Deterministic synthetic recruitment corpora for tests and demos.

Position popularity follows a configurable Zipf law, salaries are
log-normal per employment class, and identifiers follow the schema
patterns exactly, so every generated row passes validation. The same
(config, seed) always produces identical bytes.
"""

from __future__ import annotations

import csv
import hashlib
import io
from dataclasses import dataclass, fields, replace
from pathlib import Path

import numpy as np

from .codes import EDUCATION_ORDER, EXPERIENCE_ORDER
from .ingest import SCHEMA_COLUMNS

# Global requirement mixes; each position also gets a home profile so
# per-position distributions concentrate the way real postings do.
_EDU_WEIGHTS = (0.05, 0.05, 0.08, 0.12, 0.25, 0.30, 0.10, 0.05)  # over EDUCATION_ORDER
_EXP_WEIGHTS = (0.18, 0.16, 0.18, 0.20, 0.10, 0.08, 0.06, 0.04)  # over EXPERIENCE_ORDER
_PROFILE_CONCENTRATION = 0.65
_HOME_INDUSTRY_SHARE = 0.8


class GenConfigError(ValueError):
    """Impossible or out-of-range generator configuration."""


@dataclass(frozen=True)
class GenConfig:
    record_count: int = 1000
    position_count: int = 200
    company_count: int = 400
    industry_count: int = 30
    province_count: int = 12
    cities_per_province: tuple[int, int] = (3, 8)
    zipf_exponent: float = 1.2
    flexible_share: float = 0.25
    negotiable_share: float = 0.02
    permanent_salary: tuple[float, float] = (11.6, 0.45)  # log-mean/log-sigma, CNY/yr
    flexible_salary: tuple[float, float] = (10.9, 0.50)
    seed: int = 0

    def validate(self) -> None:
        for name in ("record_count", "position_count", "company_count", "industry_count"):
            if getattr(self, name) < 1:
                raise GenConfigError(f"{name} must be positive")
        if not 1 <= self.province_count <= 26:
            raise GenConfigError("province_count must be in 1..26")
        lo, hi = self.cities_per_province
        if lo < 1 or hi < lo:
            raise GenConfigError("cities_per_province needs 1 <= min <= max")
        if not 0 <= self.flexible_share <= 1 or not 0 <= self.negotiable_share <= 1:
            raise GenConfigError("shares must lie in [0, 1]")
        if self.flexible_share + self.negotiable_share > 1:
            raise GenConfigError("flexible_share + negotiable_share must not exceed 1")
        if self.zipf_exponent <= 0:
            raise GenConfigError("zipf_exponent must be positive")

    @classmethod
    def from_file(cls, path: str | Path) -> "GenConfig":
        """Load a key=value config file; unknown keys are an error."""
        values: dict[str, object] = {}
        known = {f.name: f for f in fields(cls)}
        for raw_line in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw_line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise GenConfigError(f"expected key=value, got {line!r}")
            key, _, text = line.partition("=")
            key = key.strip()
            text = text.strip()
            if key not in known:
                raise GenConfigError(f"unknown config key: {key!r}")
            values[key] = _parse_config_value(key, text)
        return cls(**values)  # type: ignore[arg-type]


def _parse_config_value(key: str, text: str):
    try:
        if key in ("cities_per_province",):
            lo, hi = text.split(",")
            return (int(lo), int(hi))
        if key in ("permanent_salary", "flexible_salary"):
            mean, sigma = text.split(",")
            return (float(mean), float(sigma))
        if key in ("zipf_exponent", "flexible_share", "negotiable_share"):
            return float(text)
        return int(text)
    except ValueError:
        raise GenConfigError(f"bad value for {key}: {text!r}") from None


def _hex_id(salt: str, index: int, length: int) -> str:
    return hashlib.md5(f"{salt}:{index}".encode("utf-8")).hexdigest()[:length]


def _position_id(salt: str, index: int) -> str:
    digest = _hex_id(salt, index, 16)
    return "-".join(digest[i : i + 4] for i in range(0, 16, 4))


def _zipf_probabilities(n: int, exponent: float) -> np.ndarray:
    weights = np.arange(1, n + 1, dtype=np.float64) ** -exponent
    return weights / weights.sum()


def generate(config: GenConfig) -> bytes:
    """Emit a schema-valid CSV corpus; same config -> identical bytes."""
    config.validate()
    rng = np.random.default_rng(config.seed)
    n = config.record_count

    positions = [_position_id("position", i) for i in range(config.position_count)]
    companies = [_hex_id("company", i, 8) for i in range(config.company_count)]
    industries = [_hex_id("industry", i, 6) for i in range(config.industry_count)]
    provinces = [chr(ord("A") + i) for i in range(config.province_count)]

    lo, hi = config.cities_per_province
    city_counts = rng.integers(lo, hi + 1, size=config.province_count)

    pos_home_industry = rng.integers(0, config.industry_count, size=config.position_count)
    pos_home_edu = rng.choice(8, size=config.position_count, p=_EDU_WEIGHTS)
    pos_home_exp = rng.choice(8, size=config.position_count, p=_EXP_WEIGHTS)

    pos_idx = rng.choice(
        config.position_count, size=n, p=_zipf_probabilities(config.position_count, config.zipf_exponent)
    )
    prov_idx = rng.integers(0, config.province_count, size=n)
    city_pick = rng.random(n)
    company_idx = rng.integers(0, config.company_count, size=n)

    use_home_edu = rng.random(n) < _PROFILE_CONCENTRATION
    rand_edu = rng.choice(8, size=n, p=_EDU_WEIGHTS)
    use_home_exp = rng.random(n) < _PROFILE_CONCENTRATION
    rand_exp = rng.choice(8, size=n, p=_EXP_WEIGHTS)
    use_home_industry = rng.random(n) < _HOME_INDUSTRY_SHARE
    rand_industry = rng.integers(0, config.industry_count, size=n)

    class_u = rng.random(n)
    perm_kind_u = rng.random(n)
    bonus = rng.integers(1, 4, size=n)
    flex_kind = rng.integers(0, 3, size=n)
    pm, ps = config.permanent_salary
    fm, fs = config.flexible_salary
    annual_perm = rng.lognormal(pm, ps, size=n)
    annual_flex = rng.lognormal(fm, fs, size=n)
    spread = rng.uniform(0.05, 0.30, size=n)

    neg_cut = config.negotiable_share
    flex_cut = config.negotiable_share + config.flexible_share
    flex_kinds = ("WEEKLY", "DAILY", "HOURLY")
    flex_factors = (52, 261, 2088)

    rows = []
    for i in range(n):
        province = provinces[prov_idx[i]]
        city = f"{province}{int(city_pick[i] * city_counts[prov_idx[i]]):03d}"
        education = EDUCATION_ORDER[pos_home_edu[pos_idx[i]] if use_home_edu[i] else rand_edu[i]]
        experience = EXPERIENCE_ORDER[pos_home_exp[pos_idx[i]] if use_home_exp[i] else rand_exp[i]]
        industry = industries[
            pos_home_industry[pos_idx[i]] if use_home_industry[i] else rand_industry[i]
        ]

        if class_u[i] < neg_cut:
            salary_type, salary_base, lower, upper = "NEGOTIABLE", "", 0, 0
        elif class_u[i] < flex_cut:
            kind = int(flex_kind[i])
            salary_type, salary_base = flex_kinds[kind], ""
            lower, upper = _bounds(annual_flex[i] / flex_factors[kind], spread[i])
        else:
            u = perm_kind_u[i]
            if u < 0.15:
                salary_type, months = "YEARLY", 12
                lower, upper = _bounds(annual_perm[i], spread[i])
            elif u < 0.80:
                salary_type, months = "MONTHLY", 12
                lower, upper = _bounds(annual_perm[i] / 12, spread[i])
            else:
                b = int(bonus[i])
                salary_type, months = f"MONTHLY+{b}", 12 + b
                lower, upper = _bounds(annual_perm[i] / (12 + b), spread[i])
            salary_base = str(months)

        rows.append(
            [
                positions[pos_idx[i]],
                province,
                city,
                "",
                salary_type,
                salary_base,
                upper,
                lower,
                companies[company_idx[i]],
                industry,
                education,
                experience,
            ]
        )

    return _rows_to_csv(rows)


def _bounds(amount: float, spread: float) -> tuple[int, int]:
    lower = max(0, int(round(amount * (1.0 - spread))))
    upper = max(lower, int(round(amount * (1.0 + spread))))
    return lower, upper


def _rows_to_csv(rows: list[list]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCHEMA_COLUMNS)
    writer.writerows(rows)
    return buf.getvalue().encode("utf-8")


# --- scenario corpora ---------------------------------------------------------
#
# Hand-shaped corpora for end-to-end interaction tests. Each starts from a
# plain generated base and appends planted rows whose shape the tests
# assert on. Planted rows use their own seeded stream, so the corpora stay
# byte-deterministic.

SCENARIOS = ("CASE1", "CASE2")

_SCENARIO_BASE = GenConfig(
    record_count=6000,
    position_count=200,
    company_count=500,
    industry_count=40,
    province_count=12,  # provinces A..L
    cities_per_province=(3, 6),
    zipf_exponent=0.5,
    flexible_share=0.2,
    negotiable_share=0.02,
)

CASE1_POSITION = _position_id("scenario-case1", 0)
CASE1_INDUSTRIES = (_hex_id("industry", 0, 6), _hex_id("industry", 1, 6))
CASE2_POSITION = _position_id("scenario-case2", 0)
CASE2_CITY = "H999"


def scenario_corpus(name: str) -> bytes:
    """CASE1 plants a dominant high-education position paid best in
    provinces K and F; CASE2 plants a city whose pay dominates its
    province and a well-paid medium-education/low-experience position."""
    if name == "CASE1":
        return _case1()
    if name == "CASE2":
        return _case2()
    raise ValueError(f"unknown scenario: {name!r} (expected one of {SCENARIOS})")


def _monthly_row(
    rng: np.random.Generator,
    position: str,
    province: str,
    city: str,
    industry: str,
    education: str,
    experience: str,
    annual_lo: int,
    annual_hi: int,
    bonus_share: float = 0.0,
) -> list:
    annual = rng.uniform(annual_lo, annual_hi)
    if bonus_share and rng.random() < bonus_share:
        salary_type, months = "MONTHLY+1", 13
    else:
        salary_type, months = "MONTHLY", 12
    lower, upper = _bounds(annual / months, rng.uniform(0.03, 0.10))
    company = _hex_id("scenario-company", int(rng.integers(0, 200)), 8)
    return [
        position, province, city, "", salary_type, str(months),
        upper, lower, company, industry, education, experience,
    ]


def _case1() -> bytes:
    base = replace(_SCENARIO_BASE, seed=101)
    rng = np.random.default_rng(base.seed + 7919)
    rows = []
    ind_a, ind_b = CASE1_INDUSTRIES
    # 130 top-paying postings in each of K and F, 40 modest ones elsewhere.
    for i in range(260):
        province = "K" if i % 2 == 0 else "F"
        rows.append(
            _monthly_row(
                rng,
                CASE1_POSITION,
                province,
                f"{province}00{i % 3}",
                ind_a if i % 2 == 0 else ind_b,
                "GP",
                "EdD",
                140_000,
                160_000,
                bonus_share=0.25,
            )
        )
    for i in range(40):
        province = "ABC"[i % 3]
        rows.append(
            _monthly_row(
                rng,
                CASE1_POSITION,
                province,
                f"{province}00{i % 3}",
                ind_a,
                "GP",
                "EdD",
                50_000,
                70_000,
            )
        )
    return _append_rows(generate(base), rows)


def _case2() -> bytes:
    base = replace(_SCENARIO_BASE, seed=202)
    rng = np.random.default_rng(base.seed + 7919)
    rows = []
    industry = _hex_id("industry", 2, 6)
    # The planted city's postings pay ~400k against a ~120k base corpus.
    for _ in range(60):
        rows.append(
            _monthly_row(
                rng, CASE2_POSITION, "H", CASE2_CITY, industry, "Gx", "Eas",
                390_000, 410_000,
            )
        )
    # The same position elsewhere, still in the top salary band.
    for i in range(40):
        province = "ABCDE"[i % 5]
        rows.append(
            _monthly_row(
                rng, CASE2_POSITION, province, f"{province}00{i % 2}", industry,
                "Gx", "Eas", 250_000, 350_000,
            )
        )
    return _append_rows(generate(base), rows)


def _append_rows(base_csv: bytes, rows: list[list]) -> bytes:
    return base_csv + _rows_to_csv(rows).split(b"\n", 1)[1]
