"""Analytics engine and coordinated-views backend for anonymized
job-posting data: ingestion, cleaning pipeline, aggregate payloads for
eight linked views, an HTTP API, and a deterministic corpus generator.
"""

from .codes import (
    EducationTier,
    EmploymentClass,
    ExperienceTier,
    SalaryKind,
    SalaryType,
)
from .filters import FilterState, match
from .ingest import (
    IngestError,
    RecruitmentRecord,
    RejectReport,
    SummaryStats,
    dataset_summary,
    parse_dataset,
)
from .normalize import NormalizedRecord, annualize, normalize_record
from .pipeline import (
    DatasetSnapshot,
    PipelineError,
    build_snapshot,
    iqr_bounds,
    load_snapshot,
    quartiles,
    save_snapshot,
    top_percent_positions,
)

__version__ = "0.1.0"

__all__ = [
    "DatasetSnapshot",
    "EducationTier",
    "EmploymentClass",
    "ExperienceTier",
    "FilterState",
    "IngestError",
    "NormalizedRecord",
    "PipelineError",
    "RecruitmentRecord",
    "RejectReport",
    "SalaryKind",
    "SalaryType",
    "SummaryStats",
    "annualize",
    "build_snapshot",
    "dataset_summary",
    "iqr_bounds",
    "load_snapshot",
    "match",
    "normalize_record",
    "parse_dataset",
    "quartiles",
    "save_snapshot",
    "top_percent_positions",
]
