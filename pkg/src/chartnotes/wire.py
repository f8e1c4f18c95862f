"""JSON wire shapes shared by the HTTP service, the CLI, and their tests.

Dates travel as ISO-8601 strings. The global extremum serializes as
``"persistence": null`` plus ``"global": true`` so clients can tell it
apart from any finite prominence.
"""

from __future__ import annotations

import datetime as dt
from typing import Mapping, Optional, Sequence

from .errors import InvalidFeature
from .model import (
    GLOBAL,
    Feature,
    FeatureKind,
    IntervalLocus,
    PointLocus,
)
from .recommender import ScoredHeadline


def feature_to_wire(feature: Feature) -> dict:
    payload: dict = {"kind": feature.kind.value}
    if isinstance(feature.locus, PointLocus):
        payload["timestamp"] = feature.locus.timestamp.isoformat()
    else:
        payload["start"] = feature.locus.start.isoformat()
        payload["end"] = feature.locus.end.isoformat()
    if feature.prominence is GLOBAL:
        payload["persistence"] = None
        payload["global"] = True
    else:
        payload["persistence"] = feature.prominence
        payload["global"] = False
    payload["rank"] = feature.rank
    return payload


def feature_from_wire(payload: Mapping, *, default_rank: int = 1) -> Feature:
    """Inverse of feature_to_wire; tolerant about omitted rank/persistence
    so manually marked features stay easy to write by hand."""
    try:
        kind = FeatureKind(payload["kind"])
    except (KeyError, ValueError) as exc:
        raise InvalidFeature(f"bad feature kind: {exc}") from exc
    has_point = "timestamp" in payload and payload["timestamp"] is not None
    has_interval = payload.get("start") is not None and payload.get("end") is not None
    if has_point == has_interval:
        raise InvalidFeature(
            "feature needs either a timestamp or a start/end pair, not both"
        )
    if has_point:
        locus = PointLocus(dt.date.fromisoformat(str(payload["timestamp"])))
    else:
        locus = IntervalLocus(
            dt.date.fromisoformat(str(payload["start"])),
            dt.date.fromisoformat(str(payload["end"])),
        )
    if payload.get("global"):
        prominence = GLOBAL
    else:
        raw = payload.get("persistence")
        prominence = 0.0 if raw is None else float(raw)
    rank = int(payload.get("rank") or default_rank)
    return Feature(kind=kind, locus=locus, prominence=prominence, rank=rank)


def features_to_wire(features: Sequence[Feature]) -> dict:
    return {"features": [feature_to_wire(f) for f in features]}


def scored_headline_to_wire(scored: ScoredHeadline) -> dict:
    return {
        "rank": scored.rank,
        "score": scored.score,
        "headline": scored.article.headline,
        "publish_date": scored.article.publish_date.isoformat(),
        "url": scored.article.url,
    }


def annotations_to_wire(
    scored: Sequence[ScoredHeadline], target: Optional[Feature] = None
) -> dict:
    payload: dict = {"annotations": [scored_headline_to_wire(s) for s in scored]}
    if target is not None:
        payload["target"] = feature_to_wire(target)
    return payload
