"""Declarative annotated-chart documents.

The output is renderer-agnostic JSON: the series data, a line mark, and
one text layer per chosen annotation, each anchored at its feature's
timestamp and value. Any charting stack can consume it; nothing here
draws pixels.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass
from typing import Sequence

from .jsonfmt import to_canonical_json

SPEC_VERSION = 1


@dataclass(frozen=True)
class TextLayer:
    """One annotation: a headline anchored to a (date, value) point."""

    date: dt.date
    value: float
    text: str
    url: str = ""
    publish_date: str = ""


def build_chart_spec(
    points: Sequence[tuple[dt.date, float]],
    layers: Sequence[TextLayer],
) -> dict:
    """Assemble the chart document. Every layer must anchor to a date that
    exists in `points`."""
    dates = {day for day, _ in points}
    for layer in layers:
        if layer.date not in dates:
            raise ValueError(
                f"annotation anchored at {layer.date}, which is not in the series"
            )
    return {
        "spec_version": SPEC_VERSION,
        "chart": {"type": "line", "x": "date", "y": "value"},
        "data": [
            {"date": day.isoformat(), "value": value}
            for day, value in sorted(points, key=lambda p: p[0])
        ],
        "layers": [
            {
                "type": "text",
                "date": layer.date.isoformat(),
                "value": layer.value,
                "text": layer.text,
                "url": layer.url,
                "publish_date": layer.publish_date,
            }
            for layer in layers
        ],
    }


def chart_spec_json(
    points: Sequence[tuple[dt.date, float]],
    layers: Sequence[TextLayer],
) -> str:
    """Canonical serialized form; byte-stable for identical inputs."""
    return to_canonical_json(build_chart_spec(points, layers))
