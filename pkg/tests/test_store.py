"""Store curation, querying, persistence, and the archive client."""

import datetime as dt
import json
import logging

import pytest

from chartnotes import (
    ArticleRecord,
    AuthError,
    EmptyKeywords,
    HeadlineStore,
    MalformedRecord,
    NetworkError,
    RateLimited,
    SchemaVersionMismatch,
    StoreFileError,
    TimeRange,
    ingest,
    load_store,
    parse_raw_record,
    query,
    save_store,
)
from chartnotes.archive import fetch_archive_month
from chartnotes.store import SCHEMA_VERSION

JULY = TimeRange(dt.date(2018, 7, 1), dt.date(2018, 7, 31))


class TestParseRawRecord:
    def test_full_record(self):
        record = parse_raw_record(
            {
                "id": "abc",
                "headline": "A Headline",
                "publish_date": "2018-07-03",
                "article_type": "News",
                "lede": "Lede text.",
                "url": "https://example.com",
            }
        )
        assert record.id == "abc"
        assert record.publish_date == dt.date(2018, 7, 3)
        assert record.article_type == "News"

    def test_missing_id_is_synthesized_stably(self):
        raw = {"headline": "Same Headline", "publish_date": "2018-07-03"}
        first = parse_raw_record(dict(raw))
        second = parse_raw_record(dict(raw))
        assert first.id == second.id
        assert first.id.startswith("sha1:")

    def test_different_headlines_get_different_ids(self):
        a = parse_raw_record({"headline": "One", "publish_date": "2018-07-03"})
        b = parse_raw_record({"headline": "Two", "publish_date": "2018-07-03"})
        assert a.id != b.id

    def test_timestamped_date_truncated_to_day(self):
        record = parse_raw_record(
            {"headline": "X", "publish_date": "2018-07-03T14:22:10+0000"}
        )
        assert record.publish_date == dt.date(2018, 7, 3)

    def test_missing_headline(self):
        with pytest.raises(MalformedRecord):
            parse_raw_record({"publish_date": "2018-07-03"})

    def test_missing_date(self):
        with pytest.raises(MalformedRecord):
            parse_raw_record({"headline": "X"})

    def test_garbage_date(self):
        with pytest.raises(MalformedRecord):
            parse_raw_record({"headline": "X", "publish_date": "yesterday"})


class TestIngest:
    def test_fixture_keeps_three_of_five(self, raw_records):
        # one duplicate id and one op-ed are dropped
        store = ingest(raw_records)
        assert len(store) == 3
        assert [r.id for r in store.records] == ["nyt-1", "nyt-2", "nyt-4"]

    def test_first_duplicate_wins(self, raw_records):
        store = ingest(raw_records)
        kept = next(r for r in store.records if r.id == "nyt-2")
        assert kept.headline == "Heat Wave Grips the West"

    def test_type_filter_is_case_insensitive(self):
        store = ingest(
            [{"id": "a", "headline": "X", "publish_date": "2018-07-01", "article_type": "NEWS"}]
        )
        assert len(store) == 1

    def test_custom_allowlist(self, raw_records):
        store = ingest(raw_records, allowed_types={"op-ed"})
        assert [r.id for r in store.records] == ["nyt-3"]

    def test_malformed_records_skipped_with_warning(self, caplog):
        raws = [
            {"id": "a", "headline": "Good", "publish_date": "2018-07-01"},
            {"id": "b", "publish_date": "2018-07-01"},
            {"id": "c", "headline": "Bad date", "publish_date": "???"},
        ]
        with caplog.at_level(logging.WARNING):
            store = ingest(raws)
        assert len(store) == 1
        assert "2 malformed" in caplog.text

    def test_empty_input_gives_empty_store(self):
        assert len(ingest([])) == 0


class TestHeadlineStore:
    def test_duplicate_ids_rejected(self):
        record = ArticleRecord("same", "X", dt.date(2018, 7, 1))
        other = ArticleRecord("same", "Y", dt.date(2018, 7, 2))
        with pytest.raises(ValueError):
            HeadlineStore((record, other))

    def test_date_index_groups_positions(self):
        records = (
            ArticleRecord("a", "X", dt.date(2018, 7, 1)),
            ArticleRecord("b", "Y", dt.date(2018, 7, 2)),
            ArticleRecord("c", "Z", dt.date(2018, 7, 1)),
        )
        store = HeadlineStore(records)
        assert store.date_index[dt.date(2018, 7, 1)] == (0, 2)


class TestQuery:
    def test_matches_headline_or_lede(self, tiny_store):
        by_headline = query(tiny_store, JULY, ["wildfire"])
        assert {r.id for r in by_headline} == {"nyt-1", "nyt-2"}
        by_lede = query(tiny_store, JULY, ["redding"])
        assert [r.id for r in by_lede] == ["nyt-1"]

    def test_case_insensitive(self, tiny_store):
        assert query(tiny_store, JULY, ["WILDFIRE"]) == query(
            tiny_store, JULY, ["wildfire"]
        )

    def test_whole_phrase_substring(self, tiny_store):
        assert query(tiny_store, JULY, ["heat wave"])
        assert not query(tiny_store, JULY, ["wave heat"])

    def test_range_is_inclusive_and_local(self, tiny_store):
        whole_decade = TimeRange(dt.date(2010, 1, 1), dt.date(2019, 12, 31))
        assert {r.id for r in query(tiny_store, whole_decade, ["wildfire"])} == {
            "nyt-1",
            "nyt-2",
            "nyt-4",
        }
        exact_day = TimeRange(dt.date(2013, 7, 20), dt.date(2013, 7, 20))
        assert [r.id for r in query(tiny_store, exact_day, ["wildfire"])] == ["nyt-4"]

    def test_sorted_by_date_then_id(self, tiny_store):
        results = query(
            tiny_store, TimeRange(dt.date(2010, 1, 1), dt.date(2019, 12, 31)), ["wildfire"]
        )
        keys = [(r.publish_date, r.id) for r in results]
        assert keys == sorted(keys)

    def test_no_matches_is_empty_not_error(self, tiny_store):
        assert query(tiny_store, JULY, ["volcano"]) == []

    def test_empty_keywords_rejected(self, tiny_store):
        with pytest.raises(EmptyKeywords):
            query(tiny_store, JULY, [])
        with pytest.raises(EmptyKeywords):
            query(tiny_store, JULY, ["", "  "])


class TestPersistence:
    def test_round_trip(self, tiny_store, tmp_path):
        path = str(tmp_path / "store.ndjson")
        save_store(tiny_store, path)
        assert load_store(path) == tiny_store

    def test_header_line_shape(self, tiny_store, tmp_path):
        path = tmp_path / "store.ndjson"
        save_store(tiny_store, str(path))
        header = json.loads(path.read_text(encoding="utf-8").splitlines()[0])
        assert header == {"schema_version": SCHEMA_VERSION, "record_count": 3}

    def test_empty_store_round_trip(self, tmp_path):
        path = str(tmp_path / "empty.ndjson")
        save_store(HeadlineStore(()), path)
        assert len(load_store(path)) == 0

    def test_schema_version_mismatch(self, tmp_path):
        path = tmp_path / "store.ndjson"
        path.write_text('{"schema_version": 99, "record_count": 0}\n', encoding="utf-8")
        with pytest.raises(SchemaVersionMismatch):
            load_store(str(path))

    def test_unreadable_header(self, tmp_path):
        path = tmp_path / "store.ndjson"
        path.write_text("not json\n", encoding="utf-8")
        with pytest.raises(StoreFileError):
            load_store(str(path))

    def test_empty_file(self, tmp_path):
        path = tmp_path / "store.ndjson"
        path.write_text("", encoding="utf-8")
        with pytest.raises(StoreFileError):
            load_store(str(path))

    def test_bad_record_line_reported(self, tmp_path):
        path = tmp_path / "store.ndjson"
        path.write_text(
            '{"schema_version": 1, "record_count": 1}\n{"id": "a"}\n', encoding="utf-8"
        )
        with pytest.raises(StoreFileError, match="line 2"):
            load_store(str(path))

    def test_record_count_mismatch(self, tiny_store, tmp_path):
        path = tmp_path / "store.ndjson"
        save_store(tiny_store, str(path))
        lines = path.read_text(encoding="utf-8").splitlines()
        path.write_text("\n".join(lines[:-1]) + "\n", encoding="utf-8")
        with pytest.raises(StoreFileError, match="promises"):
            load_store(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_store(str(tmp_path / "absent.ndjson"))


class _FakeResponse:
    def __init__(self, status_code, payload=None):
        self.status_code = status_code
        self._payload = payload

    def json(self):
        if self._payload is None:
            raise ValueError("no body")
        return self._payload


class _FakeSession:
    def __init__(self, responses):
        self.responses = list(responses)
        self.calls = []

    def get(self, url, params=None, timeout=None):
        self.calls.append((url, params))
        return self.responses.pop(0)


def _archive_payload(docs):
    return {"response": {"docs": docs}}


class TestFetchArchiveMonth:
    DOC = {
        "_id": "nyt://article/1",
        "headline": {"main": "Carr Fire Grows"},
        "pub_date": "2018-07-26T12:00:00+0000",
        "type_of_material": "News",
        "lead_paragraph": "The fire spread overnight.",
        "web_url": "https://example.com/carr",
    }

    def test_flattens_documents(self):
        session = _FakeSession([_FakeResponse(200, _archive_payload([self.DOC]))])
        raws = fetch_archive_month(2018, 7, "k", session=session)
        assert raws == [
            {
                "id": "nyt://article/1",
                "headline": "Carr Fire Grows",
                "publish_date": "2018-07-26",
                "article_type": "news",
                "lede": "The fire spread overnight.",
                "url": "https://example.com/carr",
            }
        ]

    def test_url_and_key_parameter(self):
        session = _FakeSession([_FakeResponse(200, _archive_payload([]))])
        fetch_archive_month(2018, 7, "secret", base_url="https://host/v1", session=session)
        url, params = session.calls[0]
        assert url == "https://host/v1/2018/7.json"
        assert params == {"api-key": "secret"}

    def test_month_validated_before_network(self):
        session = _FakeSession([])
        with pytest.raises(ValueError):
            fetch_archive_month(2018, 13, "k", session=session)
        assert session.calls == []

    def test_year_validated(self):
        with pytest.raises(ValueError):
            fetch_archive_month(1700, 1, "k", session=_FakeSession([]))

    def test_missing_key(self, monkeypatch):
        monkeypatch.delenv("ALMANAC_ARCHIVE_KEY", raising=False)
        with pytest.raises(AuthError):
            fetch_archive_month(2018, 7, session=_FakeSession([]))

    def test_key_from_environment(self, monkeypatch):
        monkeypatch.setenv("ALMANAC_ARCHIVE_KEY", "env-key")
        session = _FakeSession([_FakeResponse(200, _archive_payload([]))])
        fetch_archive_month(2018, 7, session=session)
        assert session.calls[0][1] == {"api-key": "env-key"}

    def test_rejected_key(self):
        session = _FakeSession([_FakeResponse(401)])
        with pytest.raises(AuthError):
            fetch_archive_month(2018, 7, "bad", session=session)

    def test_throttle_retries_with_backoff_then_succeeds(self):
        session = _FakeSession(
            [_FakeResponse(429), _FakeResponse(429), _FakeResponse(200, _archive_payload([]))]
        )
        naps = []
        raws = fetch_archive_month(2018, 7, "k", session=session, sleep=naps.append)
        assert raws == []
        assert naps == [12.0, 24.0]

    def test_throttle_exhausts_attempts(self):
        session = _FakeSession([_FakeResponse(429)] * 5)
        naps = []
        with pytest.raises(RateLimited):
            fetch_archive_month(2018, 7, "k", session=session, sleep=naps.append)
        assert len(naps) == 4

    def test_server_error(self):
        session = _FakeSession([_FakeResponse(500)])
        with pytest.raises(NetworkError):
            fetch_archive_month(2018, 7, "k", session=session)

    def test_malformed_payload(self):
        session = _FakeSession([_FakeResponse(200, {"unexpected": True})])
        with pytest.raises(NetworkError):
            fetch_archive_month(2018, 7, "k", session=session)

    def test_url_override_from_environment(self, monkeypatch):
        monkeypatch.setenv("ALMANAC_ARCHIVE_URL", "https://mirror/api/")
        session = _FakeSession([_FakeResponse(200, _archive_payload([]))])
        fetch_archive_month(2018, 7, "k", session=session)
        assert session.calls[0][0] == "https://mirror/api/2018/7.json"
