"""Shared fixtures: a small raw-record corpus and series builders."""

from __future__ import annotations

import datetime as dt

import pytest

from chartnotes import Granularity, HeadlineStore, ingest, normalize_series

# Five raw records: one duplicate id, one opinion piece. Ingest with the
# default allowlist keeps three.
RAW_RECORDS = [
    {
        "id": "nyt-1",
        "headline": "Wildfire Spreads Across Northern California",
        "publish_date": "2018-07-03",
        "article_type": "News",
        "lede": "A fast-moving fire forced evacuations near Redding.",
        "url": "https://example.com/1",
    },
    {
        "id": "nyt-2",
        "headline": "Heat Wave Grips the West",
        "publish_date": "2018-07-10",
        "article_type": "news",
        "lede": "Record temperatures fed wildfire conditions.",
        "url": "https://example.com/2",
    },
    {
        "id": "nyt-2",
        "headline": "Duplicate Entry That Must Be Dropped",
        "publish_date": "2018-07-12",
        "article_type": "news",
        "lede": "wildfire",
        "url": "https://example.com/2b",
    },
    {
        "id": "nyt-3",
        "headline": "Why Fire Policy Fails",
        "publish_date": "2018-07-11",
        "article_type": "Op-Ed",
        "lede": "An argument about wildfire management.",
        "url": "https://example.com/3",
    },
    {
        "id": "nyt-4",
        "headline": "Smoke From Old Blazes Lingered for Weeks",
        "publish_date": "2013-07-20",
        "article_type": "news",
        "lede": "The wildfire season of 2013 in review.",
        "url": "https://example.com/4",
    },
]


@pytest.fixture
def raw_records() -> list[dict]:
    return [dict(record) for record in RAW_RECORDS]


@pytest.fixture
def tiny_store(raw_records) -> HeadlineStore:
    return ingest(raw_records)


def month_series(values, keywords=("wildfire",), start=dt.date(2018, 1, 1)):
    """Series with one point per consecutive month starting at `start`."""
    points = []
    year, month = start.year, start.month
    for value in values:
        points.append((dt.date(year, month, 1), float(value)))
        month += 1
        if month > 12:
            month = 1
            year += 1
    return normalize_series(points, Granularity.MONTH, list(keywords))
