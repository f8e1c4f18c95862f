"""Domain type construction, snapping, and CSV input."""

import datetime as dt
import io
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chartnotes import (
    GLOBAL,
    DuplicateTimestamp,
    EmptyInput,
    Feature,
    FeatureKind,
    Granularity,
    IntervalLocus,
    MisalignedTimestamp,
    NonFiniteValue,
    PointLocus,
    TimeRange,
    TimeSeries,
    TooShort,
    normalize_series,
    period_of,
    read_points_csv,
    snap_date,
)

DATES = st.dates(min_value=dt.date(1900, 1, 1), max_value=dt.date(2100, 12, 31))


class TestSnapDate:
    def test_year(self):
        assert snap_date(dt.date(2018, 7, 26), Granularity.YEAR) == dt.date(2018, 1, 1)

    def test_month(self):
        assert snap_date(dt.date(2018, 7, 26), Granularity.MONTH) == dt.date(2018, 7, 1)

    def test_week_snaps_to_monday(self):
        # 2018-07-26 is a Thursday; its ISO week starts Monday 2018-07-23
        assert snap_date(dt.date(2018, 7, 26), Granularity.WEEK) == dt.date(2018, 7, 23)
        assert snap_date(dt.date(2018, 7, 23), Granularity.WEEK) == dt.date(2018, 7, 23)

    def test_day_unchanged(self):
        assert snap_date(dt.date(2018, 7, 26), Granularity.DAY) == dt.date(2018, 7, 26)

    @given(DATES, st.sampled_from(list(Granularity)))
    def test_idempotent(self, day, granularity):
        once = snap_date(day, granularity)
        assert snap_date(once, granularity) == once


class TestPeriodOf:
    def test_month_period(self):
        assert period_of(dt.date(2018, 7, 1), Granularity.MONTH) == TimeRange(
            dt.date(2018, 7, 1), dt.date(2018, 7, 31)
        )

    def test_december_period(self):
        assert period_of(dt.date(2018, 12, 15), Granularity.MONTH) == TimeRange(
            dt.date(2018, 12, 1), dt.date(2018, 12, 31)
        )

    def test_leap_february(self):
        assert period_of(dt.date(2020, 2, 10), Granularity.MONTH).end == dt.date(2020, 2, 29)

    def test_year_period(self):
        assert period_of(dt.date(2018, 7, 26), Granularity.YEAR) == TimeRange(
            dt.date(2018, 1, 1), dt.date(2018, 12, 31)
        )

    def test_week_period(self):
        assert period_of(dt.date(2018, 7, 26), Granularity.WEEK) == TimeRange(
            dt.date(2018, 7, 23), dt.date(2018, 7, 29)
        )

    def test_day_period_is_single_day(self):
        day = dt.date(2018, 7, 26)
        assert period_of(day, Granularity.DAY) == TimeRange(day, day)

    @given(DATES, st.sampled_from(list(Granularity)))
    def test_period_contains_its_day(self, day, granularity):
        assert day in period_of(day, granularity)


class TestTimeRange:
    def test_backwards_range_rejected(self):
        with pytest.raises(ValueError):
            TimeRange(dt.date(2018, 7, 2), dt.date(2018, 7, 1))

    def test_endpoints_inclusive(self):
        r = TimeRange(dt.date(2018, 7, 1), dt.date(2018, 7, 31))
        assert dt.date(2018, 7, 1) in r
        assert dt.date(2018, 7, 31) in r
        assert dt.date(2018, 8, 1) not in r


class TestFeature:
    def test_point_peak(self):
        f = Feature(FeatureKind.PEAK, PointLocus(dt.date(2018, 7, 1)), 2.5, 1)
        assert f.prominence == 2.5

    def test_global_sentinel_allowed(self):
        f = Feature(FeatureKind.PEAK, PointLocus(dt.date(2018, 7, 1)), GLOBAL, 1)
        assert f.prominence is GLOBAL

    def test_integer_prominence_coerced_to_float(self):
        f = Feature(FeatureKind.VALLEY, PointLocus(dt.date(2018, 7, 1)), 3, 2)
        assert isinstance(f.prominence, float)

    def test_trend_requires_interval(self):
        from chartnotes import InvalidFeature

        with pytest.raises(InvalidFeature):
            Feature(FeatureKind.TREND, PointLocus(dt.date(2018, 7, 1)), 1.0, 1)

    def test_trend_never_global(self):
        from chartnotes import InvalidFeature

        locus = IntervalLocus(dt.date(2018, 7, 1), dt.date(2018, 9, 1))
        with pytest.raises(InvalidFeature):
            Feature(FeatureKind.TREND, locus, GLOBAL, 1)

    def test_backwards_interval_rejected(self):
        from chartnotes import InvalidFeature

        with pytest.raises(InvalidFeature):
            IntervalLocus(dt.date(2018, 9, 1), dt.date(2018, 7, 1))

    @pytest.mark.parametrize("bad", [-1.0, math.nan, math.inf])
    def test_bad_prominence_rejected(self, bad):
        from chartnotes import InvalidFeature

        with pytest.raises(InvalidFeature):
            Feature(FeatureKind.PEAK, PointLocus(dt.date(2018, 7, 1)), bad, 1)

    def test_rank_must_be_positive(self):
        from chartnotes import InvalidFeature

        with pytest.raises(InvalidFeature):
            Feature(FeatureKind.PEAK, PointLocus(dt.date(2018, 7, 1)), 1.0, 0)


class TestTimeSeries:
    def test_single_point_too_short(self):
        with pytest.raises(TooShort):
            TimeSeries(((dt.date(2018, 7, 1), 1.0),), Granularity.MONTH)

    def test_non_finite_rejected(self):
        points = ((dt.date(2018, 7, 1), 1.0), (dt.date(2018, 8, 1), math.nan))
        with pytest.raises(NonFiniteValue):
            TimeSeries(points, Granularity.MONTH)

    def test_duplicate_timestamp(self):
        points = ((dt.date(2018, 7, 1), 1.0), (dt.date(2018, 7, 1), 2.0))
        with pytest.raises(DuplicateTimestamp):
            TimeSeries(points, Granularity.MONTH)

    def test_unsorted_rejected(self):
        points = ((dt.date(2018, 8, 1), 1.0), (dt.date(2018, 7, 1), 2.0))
        with pytest.raises(ValueError):
            TimeSeries(points, Granularity.MONTH)

    def test_misaligned_timestamp(self):
        points = ((dt.date(2018, 7, 4), 1.0), (dt.date(2018, 8, 1), 2.0))
        with pytest.raises(MisalignedTimestamp):
            TimeSeries(points, Granularity.MONTH)

    def test_blank_keyword_rejected(self):
        points = ((dt.date(2018, 7, 1), 1.0), (dt.date(2018, 8, 1), 2.0))
        with pytest.raises(ValueError):
            TimeSeries(points, Granularity.MONTH, ("",))

    def test_value_at(self):
        points = ((dt.date(2018, 7, 1), 1.0), (dt.date(2018, 8, 1), 2.0))
        series = TimeSeries(points, Granularity.MONTH)
        assert series.value_at(dt.date(2018, 8, 1)) == 2.0
        with pytest.raises(KeyError):
            series.value_at(dt.date(2018, 9, 1))


class TestNormalizeSeries:
    def test_snaps_and_sorts(self):
        raw = [(dt.date(2018, 8, 14), 2.0), (dt.date(2018, 7, 26), 1.0)]
        series = normalize_series(raw, Granularity.MONTH)
        assert series.timestamps == (dt.date(2018, 7, 1), dt.date(2018, 8, 1))
        assert series.values == (1.0, 2.0)

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            normalize_series([], Granularity.MONTH)

    def test_bucket_collision_is_an_error(self):
        raw = [(dt.date(2018, 7, 4), 1.0), (dt.date(2018, 7, 26), 2.0)]
        with pytest.raises(DuplicateTimestamp):
            normalize_series(raw, Granularity.MONTH)

    def test_idempotent(self):
        raw = [(dt.date(2018, 7, 26), 1.0), (dt.date(2018, 8, 14), 2.0)]
        series = normalize_series(raw, Granularity.MONTH)
        again = normalize_series(series.points, Granularity.MONTH)
        assert again.points == series.points


class TestReadPointsCsv:
    def test_happy_path(self):
        source = io.StringIO("date,value\n2018-07-01,1.5\n2018-08-01,2\n")
        assert read_points_csv(source) == [
            (dt.date(2018, 7, 1), 1.5),
            (dt.date(2018, 8, 1), 2.0),
        ]

    def test_bad_header(self):
        with pytest.raises(ValueError, match="header"):
            read_points_csv(io.StringIO("time,count\n2018-07-01,1\n"))

    def test_bad_date_reports_line(self):
        source = io.StringIO("date,value\n2018-07-01,1\nnot-a-date,2\n")
        with pytest.raises(ValueError, match="line 3"):
            read_points_csv(source)

    def test_bad_value_reports_line(self):
        source = io.StringIO("date,value\n2018-07-01,x\n")
        with pytest.raises(ValueError, match="line 2"):
            read_points_csv(source)

    def test_empty_file(self):
        with pytest.raises(EmptyInput):
            read_points_csv(io.StringIO(""))

    def test_header_only(self):
        with pytest.raises(EmptyInput):
            read_points_csv(io.StringIO("date,value\n"))

    def test_blank_lines_skipped(self):
        source = io.StringIO("date,value\n2018-07-01,1\n\n2018-08-01,2\n")
        assert len(read_points_csv(source)) == 2
