"""Client for the monthly news-archive metadata API.

One HTTPS GET per (year, month), authenticated by an API key passed as a
query parameter. The key comes from the ALMANAC_ARCHIVE_KEY environment
variable unless given explicitly. Fetching never touches any store file;
callers ingest and persist the returned raw metadata themselves, so a
failed month can never leave a half-written store behind.
"""

from __future__ import annotations

import datetime as dt
import os
import time
from typing import Mapping, Optional

import requests

from .errors import AuthError, NetworkError, RateLimited

ARCHIVE_KEY_ENV = "ALMANAC_ARCHIVE_KEY"
ARCHIVE_URL_ENV = "ALMANAC_ARCHIVE_URL"
DEFAULT_BASE_URL = "https://api.nytimes.com/svc/archive/v1"

# Earliest month the hosted archive serves.
_FIRST_YEAR = 1851

_MAX_ATTEMPTS = 5
_BACKOFF_SECONDS = 12.0


def _doc_to_raw(doc: Mapping[str, object]) -> dict[str, object]:
    """Flatten one archive document into the raw-record shape ingest() eats."""
    headline = doc.get("headline")
    if isinstance(headline, Mapping):
        headline = headline.get("main")
    publish_date = doc.get("pub_date") or doc.get("publish_date")
    if isinstance(publish_date, str):
        publish_date = publish_date[:10]
    article_type = (
        doc.get("type_of_material") or doc.get("article_type") or ""
    )
    return {
        "id": doc.get("_id") or doc.get("id"),
        "headline": headline,
        "publish_date": publish_date,
        "article_type": str(article_type).lower(),
        "lede": doc.get("lead_paragraph") or doc.get("abstract") or doc.get("lede") or "",
        "url": doc.get("web_url") or doc.get("url") or "",
    }


def fetch_archive_month(
    year: int,
    month: int,
    api_key: Optional[str] = None,
    *,
    base_url: Optional[str] = None,
    session: Optional[requests.Session] = None,
    sleep=time.sleep,
) -> list[dict[str, object]]:
    """Fetch one month of raw article metadata.

    Validates year/month before any network call. Retries with backoff
    when throttled; raises RateLimited once retries are spent, AuthError
    on a missing or rejected key, NetworkError for anything else.
    """
    if not 1 <= month <= 12:
        raise ValueError(f"month must be 1..12, got {month}")
    if not _FIRST_YEAR <= year <= dt.date.today().year:
        raise ValueError(f"year must be {_FIRST_YEAR}..today, got {year}")
    key = api_key if api_key is not None else os.environ.get(ARCHIVE_KEY_ENV, "")
    if not key:
        raise AuthError(
            f"no API key: pass api_key or set {ARCHIVE_KEY_ENV}"
        )
    base = (base_url or os.environ.get(ARCHIVE_URL_ENV) or DEFAULT_BASE_URL).rstrip("/")
    url = f"{base}/{year}/{month}.json"
    http = session or requests
    for attempt in range(1, _MAX_ATTEMPTS + 1):
        try:
            response = http.get(url, params={"api-key": key}, timeout=60)
        except requests.RequestException as exc:
            raise NetworkError(f"archive request failed: {exc}") from exc
        if response.status_code in (401, 403):
            raise AuthError(f"archive rejected the API key (HTTP {response.status_code})")
        if response.status_code == 429:
            if attempt == _MAX_ATTEMPTS:
                raise RateLimited(f"still throttled after {attempt} attempts")
            sleep(_BACKOFF_SECONDS * attempt)
            continue
        if response.status_code != 200:
            raise NetworkError(f"archive returned HTTP {response.status_code}")
        try:
            payload = response.json()
            docs = payload["response"]["docs"]
        except (ValueError, KeyError, TypeError) as exc:
            raise NetworkError(f"unexpected archive payload: {exc}") from exc
        return [_doc_to_raw(doc) for doc in docs]
    raise RateLimited("unreachable")  # loop always returns or raises
