"""Parsing and validation for raw recruitment datasets.

Accepts UTF-8 CSV (header row, columns in any order) or JSONL with the
twelve schema columns. Every field is validated; lines that violate the
schema become reject entries instead of aborting the batch. Accepted
records keep their input order, and serializing them back to CSV
round-trips field-for-field.
"""

from __future__ import annotations

import csv
import io
import json
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import BinaryIO, Union

from .codes import EDUCATION_CODES, EXPERIENCE_CODES, SalaryType, parse_salary_type

SCHEMA_COLUMNS: tuple[str, ...] = (
    "_id",
    "province",
    "city",
    "salary",
    "salary_type",
    "salary_base",
    "upper_bound",
    "lower_bound",
    "company",
    "industry",
    "education",
    "experience",
)

POSITION_ID_RE = re.compile(r"([a-z0-9]{4}-){3}[a-z0-9]{4}\Z")
PROVINCE_RE = re.compile(r"[A-Z]\Z")
CITY_RE = re.compile(r"[A-Z][0-9]{3}\Z")
INDUSTRY_RE = re.compile(r"[A-Za-z0-9]{6}\Z")
AMOUNT_RE = re.compile(r"-?[0-9]+\Z")

# Pseudo-column used for failures that cannot be pinned on a named field
# (row arity, undecodable JSON).
LINE_COLUMN = "<line>"

_EXCERPT_LEN = 40


class IngestError(Exception):
    """Fatal problem with the input itself: undecodable bytes or a header
    that does not name the twelve schema columns."""


class RecordError(ValueError):
    """One line failed validation; names the offending column and rule."""

    def __init__(self, column: str, reason: str, value: str) -> None:
        super().__init__(f"{column}: {reason} ({value!r})")
        self.column = column
        self.reason = reason
        self.value = value


@dataclass(frozen=True)
class RawRecord:
    """An unvalidated line: its position in the file and the raw cell texts."""

    line_number: int
    fields: Mapping[str, str]


@dataclass(frozen=True)
class RecruitmentRecord:
    """One validated posting row.

    Salary bounds are integer CNY amounts quoted per the salary type's
    period; ``salary_base`` is carried verbatim and unused by computation.
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


@dataclass(frozen=True)
class RejectEntry:
    line_number: int
    column: str
    reason: str
    excerpt: str


@dataclass(frozen=True)
class RejectReport:
    """Per-batch accounting: accepted + len(rejects) == total_lines."""

    total_lines: int
    accepted: int
    rejects: tuple[RejectEntry, ...]

    def to_csv(self) -> bytes:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["line_number", "column", "reason", "excerpt"])
        for entry in self.rejects:
            writer.writerow([entry.line_number, entry.column, entry.reason, entry.excerpt])
        return buf.getvalue().encode("utf-8")


@dataclass(frozen=True)
class SummaryStats:
    record_count: int
    distinct_positions: int
    distinct_companies: int
    distinct_industries: int
    distinct_provinces: int
    distinct_cities: int


def _excerpt(value: str) -> str:
    return value[:_EXCERPT_LEN]


def _parse_amount(column: str, value: str) -> int:
    if not AMOUNT_RE.match(value):
        raise RecordError(column, "amount_invalid", value)
    amount = int(value)
    if amount < 0:
        raise RecordError(column, "amount_negative", value)
    return amount


def validate_record(raw: RawRecord) -> RecruitmentRecord:
    """Validate one raw line against the schema.

    Checks run in a fixed column order so the raised RecordError always
    names the first failing column; cross-field rules (city prefix,
    bound ordering) run after the per-field ones.
    """
    fields = raw.fields
    for column in SCHEMA_COLUMNS:
        if column not in fields:
            raise RecordError(column, "missing_column", "")
    for column in sorted(fields):
        if column not in SCHEMA_COLUMNS:
            raise RecordError(column, "unexpected_column", _excerpt(fields[column]))

    position_id = fields["_id"]
    if not POSITION_ID_RE.match(position_id):
        raise RecordError("_id", "position_pattern", _excerpt(position_id))

    province = fields["province"]
    if not PROVINCE_RE.match(province):
        raise RecordError("province", "province_pattern", _excerpt(province))

    city = fields["city"]
    if not CITY_RE.match(city):
        raise RecordError("city", "city_pattern", _excerpt(city))

    # fields["salary"] is accepted and ignored; the bounds are authoritative.

    try:
        salary_type = parse_salary_type(fields["salary_type"])
    except ValueError:
        raise RecordError(
            "salary_type", "salary_type_unknown", _excerpt(fields["salary_type"])
        ) from None

    salary_base = fields["salary_base"] or None

    upper_bound = _parse_amount("upper_bound", fields["upper_bound"])
    lower_bound = _parse_amount("lower_bound", fields["lower_bound"])

    company_id = fields["company"]
    if not company_id:
        raise RecordError("company", "company_empty", "")

    industry_id = fields["industry"]
    if not INDUSTRY_RE.match(industry_id):
        raise RecordError("industry", "industry_pattern", _excerpt(industry_id))

    education = fields["education"]
    if education not in EDUCATION_CODES:
        raise RecordError("education", "education_unknown", _excerpt(education))

    experience = fields["experience"]
    if experience not in EXPERIENCE_CODES:
        raise RecordError("experience", "experience_unknown", _excerpt(experience))

    if city[0] != province:
        raise RecordError("city", "province_city_mismatch", _excerpt(city))
    if lower_bound > upper_bound:
        raise RecordError("upper_bound", "bounds_inverted", _excerpt(fields["upper_bound"]))

    return RecruitmentRecord(
        position_id=position_id,
        province=province,
        city=city,
        salary_type=salary_type,
        salary_base=salary_base,
        lower_bound=lower_bound,
        upper_bound=upper_bound,
        company_id=company_id,
        industry_id=industry_id,
        education=education,
        experience=experience,
    )


Source = Union[bytes, BinaryIO]


def _text_stream(source: Source) -> io.TextIOWrapper:
    stream = io.BytesIO(source) if isinstance(source, bytes) else source
    return io.TextIOWrapper(stream, encoding="utf-8", newline="")


def parse_dataset(
    source: Source, format: str = "csv"
) -> tuple[list[RecruitmentRecord], RejectReport]:
    """Parse a CSV or JSONL dataset into validated records plus a reject report.

    Per-line violations are never fatal; an undecodable stream or a CSV
    header that does not name exactly the twelve schema columns is.
    """
    if format == "csv":
        return _parse_csv(source)
    if format == "jsonl":
        return _parse_jsonl(source)
    raise ValueError(f"unsupported format: {format!r}")


def _parse_csv(source: Source) -> tuple[list[RecruitmentRecord], RejectReport]:
    text = _text_stream(source)
    reader = csv.reader(text)
    try:
        header = next(reader, None)
    except UnicodeDecodeError as exc:
        raise IngestError(f"input is not valid UTF-8: {exc}") from exc
    if header is None:
        raise IngestError("empty input: missing header row")
    _check_header(header)

    accepted: list[RecruitmentRecord] = []
    rejects: list[RejectEntry] = []
    total = 0
    try:
        for row in reader:
            total += 1
            line_number = reader.line_num
            if len(row) != len(header):
                rejects.append(
                    RejectEntry(line_number, LINE_COLUMN, "column_count", _excerpt(",".join(row)))
                )
                continue
            raw = RawRecord(line_number, dict(zip(header, row)))
            try:
                accepted.append(validate_record(raw))
            except RecordError as err:
                rejects.append(RejectEntry(line_number, err.column, err.reason, _excerpt(err.value)))
    except UnicodeDecodeError as exc:
        raise IngestError(f"input is not valid UTF-8: {exc}") from exc

    return accepted, RejectReport(total, len(accepted), tuple(rejects))


def _check_header(header: Sequence[str]) -> None:
    seen = set(header)
    if len(seen) != len(header):
        raise IngestError("header contains duplicate columns")
    missing = [c for c in SCHEMA_COLUMNS if c not in seen]
    extra = sorted(seen - set(SCHEMA_COLUMNS))
    if missing or extra:
        raise IngestError(
            f"header must name exactly the {len(SCHEMA_COLUMNS)} schema columns"
            f" (missing: {missing}, unexpected: {extra})"
        )


def _parse_jsonl(source: Source) -> tuple[list[RecruitmentRecord], RejectReport]:
    data = source if isinstance(source, bytes) else source.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IngestError(f"input is not valid UTF-8: {exc}") from exc

    accepted: list[RecruitmentRecord] = []
    rejects: list[RejectEntry] = []
    total = 0
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        total += 1
        try:
            obj = json.loads(line)
        except json.JSONDecodeError:
            rejects.append(RejectEntry(line_number, LINE_COLUMN, "invalid_json", _excerpt(line)))
            continue
        if not isinstance(obj, dict):
            rejects.append(RejectEntry(line_number, LINE_COLUMN, "not_an_object", _excerpt(line)))
            continue
        try:
            fields = _stringify_fields(obj)
            accepted.append(validate_record(RawRecord(line_number, fields)))
        except RecordError as err:
            rejects.append(RejectEntry(line_number, err.column, err.reason, _excerpt(err.value)))

    return accepted, RejectReport(total, len(accepted), tuple(rejects))


def _stringify_fields(obj: dict) -> dict[str, str]:
    """Coerce JSONL values to the cell texts the validator expects."""
    fields: dict[str, str] = {}
    for key, value in obj.items():
        if value is None:
            fields[key] = ""
        elif isinstance(value, str):
            fields[key] = value
        elif isinstance(value, bool):
            raise RecordError(key, "value_type", str(value))
        elif isinstance(value, int):
            fields[key] = str(value)
        else:
            raise RecordError(key, "value_type", str(value))
    return fields


def records_to_csv(records: Iterable[RecruitmentRecord]) -> bytes:
    """Serialize records in the canonical column order; re-parsing the
    output yields an identical record list."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCHEMA_COLUMNS)
    for r in records:
        writer.writerow(
            [
                r.position_id,
                r.province,
                r.city,
                "",
                r.salary_type.encode(),
                r.salary_base or "",
                r.upper_bound,
                r.lower_bound,
                r.company_id,
                r.industry_id,
                r.education,
                r.experience,
            ]
        )
    return buf.getvalue().encode("utf-8")


def dataset_summary(records: Sequence[RecruitmentRecord]) -> SummaryStats:
    """Distinct-identifier counts over a record list."""
    return SummaryStats(
        record_count=len(records),
        distinct_positions=len({r.position_id for r in records}),
        distinct_companies=len({r.company_id for r in records}),
        distinct_industries=len({r.industry_id for r in records}),
        distinct_provinces=len({r.province for r in records}),
        distinct_cities=len({r.city for r in records}),
    )
