"""Stateless HTTP API over a snapshot, plus the URL filter grammar.

Every data endpoint accepts the same query grammar: repeated keys form
OR-sets within a dimension (``education=GP&education=Go``), colon pairs
constrain the education/experience combination (``pairs=GP:EdD``).
Responses are canonical JSON, so a given (snapshot, URL) always yields
identical bytes.
"""

from __future__ import annotations

import json
import threading
from typing import Iterable, Sequence
from urllib.parse import parse_qsl, urlencode

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import Response

from . import analytics
from .codes import (
    EDUCATION_CODES,
    EXPERIENCE_CODES,
    EmploymentClass,
)
from .filters import FilterState, match_array
from .ingest import CITY_RE, INDUSTRY_RE, POSITION_ID_RE, PROVINCE_RE
from .pipeline import DatasetSnapshot

FILTER_KEYS = (
    "education",
    "experience",
    "pairs",
    "province",
    "city",
    "industry",
    "position",
    "class",
)


class ApiError(Exception):
    """Error contract: HTTP status, machine code, human message."""

    def __init__(self, status: int, code: str, message: str) -> None:
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _bad_filter(message: str) -> ApiError:
    return ApiError(400, "BAD_FILTER", message)


def encode_filter(state: FilterState) -> str:
    """Bookmarkable query string; decode_filter inverts it exactly."""
    params: list[tuple[str, str]] = []
    params += [("education", v) for v in sorted(state.education)]
    params += [("experience", v) for v in sorted(state.experience)]
    params += [("pairs", f"{e}:{x}") for e, x in sorted(state.edu_exp_pairs)]
    params += [("province", v) for v in sorted(state.provinces)]
    params += [("city", v) for v in sorted(state.cities)]
    params += [("industry", v) for v in sorted(state.industries)]
    params += [("position", v) for v in sorted(state.positions)]
    if state.employment_class is not None:
        params.append(("class", state.employment_class.value))
    return urlencode(params)


def _checked(kind: str, value: str) -> str:
    if kind == "education":
        if value not in EDUCATION_CODES:
            raise _bad_filter(f"unknown education code: {value!r}")
    elif kind == "experience":
        if value not in EXPERIENCE_CODES:
            raise _bad_filter(f"unknown experience code: {value!r}")
    elif kind == "province":
        if not PROVINCE_RE.match(value):
            raise _bad_filter(f"bad province: {value!r}")
    elif kind == "city":
        if not CITY_RE.match(value):
            raise _bad_filter(f"bad city: {value!r}")
    elif kind == "industry":
        if not INDUSTRY_RE.match(value):
            raise _bad_filter(f"bad industry: {value!r}")
    elif kind == "position":
        if not POSITION_ID_RE.match(value):
            raise _bad_filter(f"bad position id: {value!r}")
    return value


def filter_from_params(
    params: Sequence[tuple[str, str]], ignore: Iterable[str] = ()
) -> FilterState:
    """Build a FilterState from query pairs; unknown keys are rejected."""
    skip = set(ignore)
    sets: dict[str, set] = {key: set() for key in FILTER_KEYS}
    for key, value in params:
        if key in skip:
            continue
        if key not in sets:
            raise _bad_filter(f"unknown filter key: {key!r}")
        sets[key].add(value)

    pairs = set()
    for text in sets["pairs"]:
        edu, sep, exp = text.partition(":")
        if not sep:
            raise _bad_filter(f"pair must be education:experience, got {text!r}")
        pairs.add((_checked("education", edu), _checked("experience", exp)))

    employment: EmploymentClass | None = None
    if sets["class"]:
        if len(sets["class"]) > 1:
            raise _bad_filter("class accepts a single value")
        value = next(iter(sets["class"]))
        try:
            employment = EmploymentClass(value)
        except ValueError:
            raise _bad_filter(f"unknown employment class: {value!r}") from None

    return FilterState(
        education=frozenset(_checked("education", v) for v in sets["education"]),
        experience=frozenset(_checked("experience", v) for v in sets["experience"]),
        edu_exp_pairs=frozenset(pairs),
        provinces=frozenset(_checked("province", v) for v in sets["province"]),
        cities=frozenset(_checked("city", v) for v in sets["city"]),
        industries=frozenset(_checked("industry", v) for v in sets["industry"]),
        positions=frozenset(_checked("position", v) for v in sets["position"]),
        employment_class=employment,
    )


def decode_filter(query: str) -> FilterState:
    return filter_from_params(parse_qsl(query, keep_blank_values=True))


class SnapshotHolder:
    """Atomic snapshot slot; in-flight readers keep whichever snapshot they
    already fetched, so a swap never breaks a running request."""

    def __init__(self, snapshot: DatasetSnapshot) -> None:
        self._snapshot = snapshot
        self._lock = threading.Lock()

    def get(self) -> DatasetSnapshot:
        return self._snapshot

    def swap(self, snapshot: DatasetSnapshot) -> None:
        with self._lock:
            self._snapshot = snapshot


def _json_response(payload: dict, status: int = 200) -> Response:
    body = json.dumps(payload, separators=(",", ":"), ensure_ascii=False, allow_nan=False)
    return Response(content=body.encode("utf-8"), status_code=status, media_type="application/json")


_SCATTER_KEYS = ("dimension", "positive", "negative")
_TREEMAP_KEYS = ("level", "parent")


def create_app(holder: SnapshotHolder | DatasetSnapshot) -> FastAPI:
    if isinstance(holder, DatasetSnapshot):
        holder = SnapshotHolder(holder)

    app = FastAPI(title="recruitlens", docs_url=None, redoc_url=None)
    app.state.holder = holder

    @app.exception_handler(ApiError)
    async def _api_error(request: Request, exc: ApiError) -> Response:
        return _json_response(
            {"status": exc.status, "code": exc.code, "message": exc.message},
            status=exc.status,
        )

    def query_pairs(request: Request) -> list[tuple[str, str]]:
        return parse_qsl(request.url.query, keep_blank_values=True)

    def state_of(request: Request, ignore: Iterable[str] = ()) -> FilterState:
        return filter_from_params(query_pairs(request), ignore=ignore)

    @app.get("/api/health")
    def health() -> Response:
        snapshot = holder.get()
        return _json_response(
            {
                "status": "ok",
                "record_count": len(snapshot),
                "provenance": snapshot.provenance.as_dict(),
            }
        )

    @app.get("/api/summary")
    def summary(request: Request) -> Response:
        snapshot = holder.get()
        idx = match_array(snapshot, state_of(request))
        cols = snapshot.columns

        def distinct(column) -> int:
            return int(len(np.unique(column[idx])))

        return _json_response(
            {
                "record_count": int(len(idx)),
                "distinct_positions": distinct(cols.position),
                "distinct_companies": distinct(cols.company),
                "distinct_industries": distinct(cols.industry),
                "distinct_provinces": distinct(cols.province),
                "distinct_cities": distinct(cols.city),
                "provenance": snapshot.provenance.as_dict(),
            }
        )

    @app.get("/api/sankey")
    def sankey(request: Request) -> Response:
        return _json_response(
            analytics.sankey_flows(holder.get(), state_of(request)).to_payload()
        )

    @app.get("/api/regions")
    def regions(request: Request) -> Response:
        return _json_response(
            analytics.region_bars(holder.get(), state_of(request)).to_payload()
        )

    @app.get("/api/positions")
    def positions(request: Request) -> Response:
        return _json_response(
            analytics.position_rows(holder.get(), state_of(request)).to_payload()
        )

    @app.get("/api/scatter")
    def scatter(request: Request) -> Response:
        pairs = query_pairs(request)
        state = filter_from_params(pairs, ignore=_SCATTER_KEYS)
        axis = _axis_from_params(pairs)
        return _json_response(
            analytics.scatter_glyphs(holder.get(), state, axis).to_payload()
        )

    @app.get("/api/bands")
    def bands(request: Request) -> Response:
        return _json_response(
            analytics.requirement_bands(holder.get(), state_of(request)).to_payload()
        )

    @app.get("/api/grid")
    def grid(request: Request) -> Response:
        return _json_response(
            analytics.industry_region_grid(holder.get(), state_of(request)).to_payload()
        )

    @app.get("/api/flowers")
    def flowers(request: Request) -> Response:
        return _json_response(
            analytics.industry_flowers(holder.get(), state_of(request)).to_payload()
        )

    @app.get("/api/treemap")
    def treemap(request: Request) -> Response:
        pairs = query_pairs(request)
        state = filter_from_params(pairs, ignore=_TREEMAP_KEYS)
        level_values = [v for k, v in pairs if k == "level"]
        parent_values = [v for k, v in pairs if k == "parent"]
        try:
            level = analytics.TreemapLevel(level_values[0]) if level_values else (
                analytics.TreemapLevel.PROVINCE
            )
        except ValueError:
            raise ApiError(422, "BAD_LEVEL", f"unknown level: {level_values[0]!r}") from None
        parent = parent_values[0] if parent_values else None
        if level is analytics.TreemapLevel.CITY and parent is None:
            raise ApiError(422, "MISSING_PARENT", "level=CITY requires a parent province")
        try:
            node = analytics.regional_treemap(holder.get(), state, level, parent)
        except analytics.UnknownRegionError as exc:
            raise ApiError(404, "UNKNOWN_REGION", str(exc)) from None
        return _json_response(node.to_payload())

    return app


def _axis_from_params(pairs: Sequence[tuple[str, str]]) -> analytics.AxisSpec:
    dimensions = [v for k, v in pairs if k == "dimension"]
    positive = frozenset(v for k, v in pairs if k == "positive")
    negative = frozenset(v for k, v in pairs if k == "negative")
    if not dimensions and not positive and not negative:
        return analytics.DEFAULT_AXIS
    if len(dimensions) != 1 or not positive or not negative:
        raise ApiError(
            422, "BAD_AXIS", "axis needs one dimension plus positive and negative values"
        )
    axis = analytics.AxisSpec(dimensions[0], positive, negative)
    try:
        axis.validate()
    except ValueError as exc:
        raise ApiError(422, "BAD_AXIS", str(exc)) from None
    return axis


def serve(
    holder: SnapshotHolder | DatasetSnapshot, port: int, host: str = "127.0.0.1"
) -> None:
    """Run the API under uvicorn (blocking)."""
    import uvicorn

    uvicorn.run(create_app(holder), host=host, port=port, log_level="info")
