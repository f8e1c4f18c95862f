"""The annotation database: news-article metadata, curated and queryable.

Stores hold headline metadata only (no article bodies). The on-disk format
is newline-delimited JSON behind a one-line header, so multi-million-record
stores stream without being held twice in memory.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json
import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    EmptyKeywords,
    MalformedRecord,
    SchemaVersionMismatch,
    StoreFileError,
)
from .model import TimeRange

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

# Article types counted as news coverage; everything else is filtered out
# at ingest. Configurable because upstream archives label types differently.
DEFAULT_NEWS_TYPES = frozenset({"news"})

_RECORD_FIELDS = ("id", "headline", "publish_date", "article_type", "lede", "url")


@dataclass(frozen=True)
class ArticleRecord:
    """Metadata for one news article. Publish dates have day precision."""

    id: str
    headline: str
    publish_date: dt.date
    article_type: str = "news"
    lede: str = ""
    url: str = ""

    def __post_init__(self) -> None:
        if not self.id:
            raise MalformedRecord("record id must be non-empty")
        if not self.headline or not self.headline.strip():
            raise MalformedRecord("headline must be non-empty")


@dataclass(frozen=True)
class HeadlineStore:
    """Immutable collection of article records with a publish-date index."""

    records: tuple[ArticleRecord, ...]
    date_index: Mapping[dt.date, tuple[int, ...]] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        seen = set()
        index: dict[dt.date, list[int]] = {}
        for position, record in enumerate(self.records):
            if record.id in seen:
                raise ValueError(f"duplicate record id {record.id!r} in store")
            seen.add(record.id)
            index.setdefault(record.publish_date, []).append(position)
        object.__setattr__(
            self,
            "date_index",
            {day: tuple(positions) for day, positions in index.items()},
        )

    def __len__(self) -> int:
        return len(self.records)


def _parse_date(value: object) -> dt.date:
    if isinstance(value, dt.date) and not isinstance(value, dt.datetime):
        return value
    if isinstance(value, dt.datetime):
        return value.date()
    if isinstance(value, str):
        try:
            return dt.date.fromisoformat(value.strip()[:10])
        except ValueError:
            pass
    raise MalformedRecord(f"unparseable publish date {value!r}")


def parse_raw_record(raw: Mapping[str, object]) -> ArticleRecord:
    """Build an ArticleRecord from raw archive metadata.

    Records missing an id get a stable one derived from (headline,
    publish_date), which doubles as the dedup key for id-less input.
    """
    headline = str(raw.get("headline") or "").strip()
    if not headline:
        raise MalformedRecord("record has no headline")
    publish_date = raw.get("publish_date")
    if publish_date is None:
        raise MalformedRecord("record has no publish date")
    day = _parse_date(publish_date)
    record_id = str(raw.get("id") or "").strip()
    if not record_id:
        digest = hashlib.sha1(
            f"{headline}\n{day.isoformat()}".encode("utf-8")
        ).hexdigest()
        record_id = f"sha1:{digest}"
    return ArticleRecord(
        id=record_id,
        headline=headline,
        publish_date=day,
        article_type=str(raw.get("article_type") or "").strip() or "news",
        lede=str(raw.get("lede") or ""),
        url=str(raw.get("url") or ""),
    )


def ingest(
    raw_records: Iterable[Mapping[str, object]],
    allowed_types: Iterable[str] = DEFAULT_NEWS_TYPES,
) -> HeadlineStore:
    """Curate raw article metadata into a store.

    Keeps only news-type records (per `allowed_types`, case-insensitive),
    drops duplicates (first occurrence wins), and skips malformed records
    with a logged warning instead of failing the whole batch.
    """
    allowed = {t.lower() for t in allowed_types}
    kept: list[ArticleRecord] = []
    seen_ids: set[str] = set()
    malformed = 0
    for raw in raw_records:
        try:
            record = parse_raw_record(raw)
        except MalformedRecord:
            malformed += 1
            continue
        if record.article_type.lower() not in allowed:
            continue
        if record.id in seen_ids:
            continue
        seen_ids.add(record.id)
        kept.append(record)
    if malformed:
        logger.warning("ingest skipped %d malformed record(s)", malformed)
    return HeadlineStore(tuple(kept))


def query(
    store: HeadlineStore,
    time_range: TimeRange,
    keywords: Sequence[str],
) -> list[ArticleRecord]:
    """Articles published inside `time_range` whose headline or lede
    contains at least one keyword (case-insensitive whole-phrase
    substring). Ordered by publish date, then id.
    """
    normalized = [kw.lower() for kw in keywords if kw.strip()]
    if not normalized:
        raise EmptyKeywords("at least one non-empty keyword is required")
    matches: list[ArticleRecord] = []
    for day in sorted(store.date_index):
        if day not in time_range:
            continue
        for position in store.date_index[day]:
            record = store.records[position]
            haystacks = (record.headline.lower(), record.lede.lower())
            if any(kw in text for kw in normalized for text in haystacks):
                matches.append(record)
    matches.sort(key=lambda record: (record.publish_date, record.id))
    return matches


def _record_to_json(record: ArticleRecord) -> str:
    payload = {
        "id": record.id,
        "headline": record.headline,
        "publish_date": record.publish_date.isoformat(),
        "article_type": record.article_type,
        "lede": record.lede,
        "url": record.url,
    }
    return json.dumps(payload, ensure_ascii=False)


def save_store(store: HeadlineStore, path: str) -> None:
    """Write a store as NDJSON: one header line, then one record per line."""
    with open(path, "w", encoding="utf-8") as handle:
        header = {"schema_version": SCHEMA_VERSION, "record_count": len(store)}
        handle.write(json.dumps(header) + "\n")
        for record in store.records:
            handle.write(_record_to_json(record) + "\n")


def load_store(path: str) -> HeadlineStore:
    """Read a store written by save_store. Round-trips structurally:
    load(save(s)) == s."""
    records: list[ArticleRecord] = []
    with open(path, "r", encoding="utf-8") as handle:
        header_line = handle.readline()
        if not header_line.strip():
            raise StoreFileError(f"{path}: missing header line")
        try:
            header = json.loads(header_line)
        except json.JSONDecodeError as exc:
            raise StoreFileError(f"{path}: unreadable header: {exc}") from exc
        version = header.get("schema_version")
        if version != SCHEMA_VERSION:
            raise SchemaVersionMismatch(
                f"{path}: schema_version {version!r}, expected {SCHEMA_VERSION}"
            )
        for line_number, line in enumerate(handle, start=2):
            if not line.strip():
                continue
            try:
                payload = json.loads(line)
            except json.JSONDecodeError as exc:
                raise StoreFileError(
                    f"{path}: line {line_number} is not valid JSON"
                ) from exc
            try:
                records.append(
                    ArticleRecord(
                        id=str(payload["id"]),
                        headline=str(payload["headline"]),
                        publish_date=_parse_date(payload["publish_date"]),
                        article_type=str(payload.get("article_type", "news")),
                        lede=str(payload.get("lede", "")),
                        url=str(payload.get("url", "")),
                    )
                )
            except (KeyError, MalformedRecord) as exc:
                raise StoreFileError(
                    f"{path}: line {line_number}: bad record ({exc})"
                ) from exc
    expected = header.get("record_count")
    if expected is not None and expected != len(records):
        raise StoreFileError(
            f"{path}: header promises {expected} records, file holds {len(records)}"
        )
    return HeadlineStore(tuple(records))
