"""Shared domain types: time series, chart features, and day ranges.

All types here are frozen dataclasses; once constructed they are safe to
share between threads and async tasks.
"""

from __future__ import annotations

import csv
import datetime as dt
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, TextIO, Union

from .errors import (
    DuplicateTimestamp,
    EmptyInput,
    InvalidFeature,
    MisalignedTimestamp,
    NonFiniteValue,
    TooShort,
)


class Granularity(str, Enum):
    """Sample rate of a series; decides timestamp snapping and day ranges."""

    YEAR = "year"
    MONTH = "month"
    WEEK = "week"
    DAY = "day"


class FeatureKind(str, Enum):
    PEAK = "peak"
    VALLEY = "valley"
    TREND = "trend"


class _Global:
    """Sentinel prominence of the global extremum.

    Kept distinct from any finite number (and from infinity) so callers can
    tell "this is the global extremum" apart from "this survived a very
    deep merge". There is exactly one instance, ``GLOBAL``.
    """

    _instance = None

    def __new__(cls) -> "_Global":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "GLOBAL"

    def __reduce__(self):
        return (_Global, ())


GLOBAL = _Global()

Prominence = Union[float, _Global]


def snap_date(day: dt.date, granularity: Granularity) -> dt.date:
    """Snap a date to the start of its granularity bucket.

    year -> Jan 1, month -> day 1, week -> Monday of the ISO week,
    day -> unchanged.
    """
    if granularity is Granularity.YEAR:
        return dt.date(day.year, 1, 1)
    if granularity is Granularity.MONTH:
        return dt.date(day.year, day.month, 1)
    if granularity is Granularity.WEEK:
        return day - dt.timedelta(days=day.weekday())
    return day


def period_of(day: dt.date, granularity: Granularity) -> "TimeRange":
    """Full calendar period (in whole days) of the sample containing `day`."""
    start = snap_date(day, granularity)
    if granularity is Granularity.YEAR:
        end = dt.date(start.year, 12, 31)
    elif granularity is Granularity.MONTH:
        if start.month == 12:
            end = dt.date(start.year, 12, 31)
        else:
            end = dt.date(start.year, start.month + 1, 1) - dt.timedelta(days=1)
    elif granularity is Granularity.WEEK:
        end = start + dt.timedelta(days=6)
    else:
        end = start
    return TimeRange(start, end)


@dataclass(frozen=True)
class TimeRange:
    """Inclusive range of whole calendar days."""

    start: dt.date
    end: dt.date

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise ValueError(f"range start {self.start} is after end {self.end}")

    def __contains__(self, day: dt.date) -> bool:
        return self.start <= day <= self.end


@dataclass(frozen=True)
class PointLocus:
    timestamp: dt.date


@dataclass(frozen=True)
class IntervalLocus:
    start: dt.date
    end: dt.date

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise InvalidFeature(
                f"interval start {self.start} is after end {self.end}"
            )


Locus = Union[PointLocus, IntervalLocus]


@dataclass(frozen=True)
class Feature:
    """A prominent peak, valley, or author-marked trend of a series.

    Peaks and valleys sit at a single sample (point locus); trends always
    span an interval and never carry the GLOBAL sentinel because they are
    author-specified, not detector-emitted.
    """

    kind: FeatureKind
    locus: Locus
    prominence: Prominence
    rank: int

    def __post_init__(self) -> None:
        if self.kind is FeatureKind.TREND:
            if not isinstance(self.locus, IntervalLocus):
                raise InvalidFeature("trend features require an interval locus")
            if isinstance(self.prominence, _Global):
                raise InvalidFeature("trend features never carry GLOBAL prominence")
        if not isinstance(self.prominence, _Global):
            prom = float(self.prominence)
            if not math.isfinite(prom) or prom < 0:
                raise InvalidFeature(
                    f"prominence must be finite and non-negative, got {prom!r}"
                )
            object.__setattr__(self, "prominence", prom)
        if self.rank < 1:
            raise InvalidFeature(f"rank must be a positive integer, got {self.rank}")


@dataclass(frozen=True)
class TimeSeries:
    """An ordered series of (timestamp, value) samples.

    Keywords describe the overall data domain and may stay empty for
    detection-only use; annotation requests require at least one.
    """

    points: tuple[tuple[dt.date, float], ...]
    granularity: Granularity
    keywords: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if len(self.points) < 2:
            raise TooShort(f"a series needs at least 2 points, got {len(self.points)}")
        previous = None
        for timestamp, value in self.points:
            if not math.isfinite(value):
                raise NonFiniteValue(f"non-finite value {value!r} at {timestamp}")
            if snap_date(timestamp, self.granularity) != timestamp:
                raise MisalignedTimestamp(
                    f"{timestamp} is not aligned to {self.granularity.value} boundaries"
                )
            if previous is not None and timestamp == previous:
                raise DuplicateTimestamp(f"repeated timestamp {timestamp}")
            if previous is not None and timestamp < previous:
                raise ValueError(
                    f"timestamps must strictly increase, got {timestamp} after {previous}"
                )
            previous = timestamp
        for keyword in self.keywords:
            if not keyword.strip():
                raise ValueError("keywords must be non-empty strings")

    @property
    def timestamps(self) -> tuple[dt.date, ...]:
        return tuple(ts for ts, _ in self.points)

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(v for _, v in self.points)

    def value_at(self, timestamp: dt.date) -> float:
        for ts, value in self.points:
            if ts == timestamp:
                return value
        raise KeyError(f"no sample at {timestamp}")


def normalize_series(
    raw_points: Sequence[tuple[dt.date, float]],
    granularity: Granularity,
    keywords: Iterable[str] = (),
) -> TimeSeries:
    """Sort raw points and snap their timestamps to granularity boundaries.

    Two raw points snapping into the same bucket is an error, never a merge;
    the input is expected to be a cleanly sampled series. Idempotent:
    normalizing an already-normalized series returns an identical one.
    """
    if not raw_points:
        raise EmptyInput("no data points given")
    snapped = []
    for timestamp, value in raw_points:
        value = float(value)
        if not math.isfinite(value):
            raise NonFiniteValue(f"non-finite value {value!r} at {timestamp}")
        snapped.append((snap_date(timestamp, granularity), value))
    snapped.sort(key=lambda point: point[0])
    for (first, _), (second, _) in zip(snapped, snapped[1:]):
        if first == second:
            raise DuplicateTimestamp(
                f"two points fall into the same {granularity.value} bucket {first}"
            )
    return TimeSeries(tuple(snapped), granularity, tuple(keywords))


def read_points_csv(source: Union[str, TextIO]) -> list[tuple[dt.date, float]]:
    """Read raw series points from CSV with header ``date,value``.

    Dates are ISO-8601. Returns points in file order; callers normalize.
    """
    if isinstance(source, str):
        with open(source, newline="", encoding="utf-8") as handle:
            return read_points_csv(handle)
    reader = csv.reader(source)
    try:
        header = next(reader)
    except StopIteration:
        raise EmptyInput("CSV is empty") from None
    if [column.strip().lower() for column in header[:2]] != ["date", "value"]:
        raise ValueError(f"expected header 'date,value', got {header!r}")
    points = []
    for line_number, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) < 2:
            raise ValueError(f"line {line_number}: expected 2 columns, got {len(row)}")
        try:
            timestamp = dt.date.fromisoformat(row[0].strip())
        except ValueError as exc:
            raise ValueError(f"line {line_number}: bad date {row[0]!r}") from exc
        try:
            value = float(row[1])
        except ValueError as exc:
            raise ValueError(f"line {line_number}: bad value {row[1]!r}") from exc
        points.append((timestamp, value))
    if not points:
        raise EmptyInput("CSV holds no data rows")
    return points
