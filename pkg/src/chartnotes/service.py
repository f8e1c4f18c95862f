"""Stateless HTTP API over a loaded headline store.

Feature detection and annotation ranking stay importable as plain library
functions; this module only adapts them to JSON over /v1 endpoints. The
store is loaded once at startup (a broken store path means the process
refuses to start) and shared read-only across requests, so identical
concurrent requests always produce identical bodies.

Error mapping: schema violations and invariant failures are 400 (with the
offending field path when the schema caught it); an annotation request
with no keywords or no context features is 422; oversized bodies are 413.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass
from typing import Literal, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .detector import detect_features
from .errors import ChartnotesError, EmptyContext, EmptyKeywords
from .model import FeatureKind, Granularity, normalize_series
from .recommender import get_annotations
from .store import HeadlineStore, load_store
from .wire import annotations_to_wire, feature_from_wire, features_to_wire


@dataclass(frozen=True)
class ServiceConfig:
    store_path: str
    host: str = "127.0.0.1"
    port: int = 8000
    max_body_bytes: int = 1_048_576
    cors_origins: tuple[str, ...] = ()


class PointIn(BaseModel):
    date: dt.date
    value: float


class SeriesIn(BaseModel):
    points: list[PointIn]
    granularity: Granularity
    keywords: list[str] = Field(default_factory=list)

    def to_series(self):
        return normalize_series(
            [(p.date, p.value) for p in self.points],
            self.granularity,
            self.keywords,
        )


class FeaturesRequest(BaseModel):
    series: SeriesIn
    kind: Literal["peak", "valley"]
    max_count: Optional[int] = None
    min_prominence: float = 0.0


class AnnotationsRequest(BaseModel):
    series: SeriesIn
    target: dict
    context: list[dict]


def build_app(store: HeadlineStore, config: Optional[ServiceConfig] = None) -> FastAPI:
    """Assemble the app around an already-loaded store."""
    app = FastAPI(title="chartnotes", version="1")
    max_body = config.max_body_bytes if config else ServiceConfig("").max_body_bytes

    if config and config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(config.cors_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.middleware("http")
    async def reject_oversized_bodies(request: Request, call_next):
        length = request.headers.get("content-length")
        if length and length.isdigit() and int(length) > max_body:
            return JSONResponse(
                status_code=413,
                content={"detail": f"request body exceeds {max_body} bytes"},
            )
        return await call_next(request)

    @app.exception_handler(RequestValidationError)
    async def schema_violation(request: Request, exc: RequestValidationError):
        detail = [
            {"loc": list(error["loc"]), "msg": error["msg"]}
            for error in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"detail": detail})

    @app.exception_handler(EmptyKeywords)
    @app.exception_handler(EmptyContext)
    async def degenerate_request(request: Request, exc: ChartnotesError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(ChartnotesError)
    async def invariant_failure(request: Request, exc: ChartnotesError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(ValueError)
    async def bad_value(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/v1/health")
    async def health():
        return {"status": "ok", "store_record_count": len(store)}

    @app.post("/v1/features")
    async def features(request: FeaturesRequest):
        series = request.series.to_series()
        detected = detect_features(
            series,
            FeatureKind(request.kind),
            max_count=request.max_count,
            min_prominence=request.min_prominence,
        )
        return features_to_wire(detected)

    @app.post("/v1/annotations")
    async def annotations(request: AnnotationsRequest):
        series = request.series.to_series()
        if not request.context:
            raise EmptyContext("at least one context feature is required")
        target = feature_from_wire(request.target)
        context = [feature_from_wire(payload) for payload in request.context]
        ranked = get_annotations(target, context, series, store)
        return annotations_to_wire(ranked)

    return app


def create_app(config: ServiceConfig) -> FastAPI:
    """Load the configured store and build the app; raises if the store
    cannot be loaded."""
    store = load_store(config.store_path)
    return build_app(store, config)
