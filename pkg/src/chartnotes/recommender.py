"""Ranks candidate headlines for a chart feature with time-ranged TF-IDF.

The headline set of each feature's day range is one *document*; the
*corpus* is the collection of those documents across the target feature
and its context features. A headline scores high when its words are
frequent in the target document but rare across the others — headlines
about whatever made this feature special, not about the domain at large.

Term counts come from headline tokens only. Ledes participate in keyword
filtering (store.query) but never in scoring.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    EmptyContext,
    EmptyDocument,
    EmptyKeywords,
    InvalidFeature,
    TermAbsentEverywhere,
)
from .model import (
    Feature,
    Granularity,
    IntervalLocus,
    PointLocus,
    TimeRange,
    TimeSeries,
    period_of,
)
from .store import ArticleRecord, HeadlineStore, query
from .stopwords import STOPWORDS

_TOKEN_SPLIT = re.compile(r"[^0-9a-z]+")


def tokenize(text: str) -> list[str]:
    """Lowercase, split on any non-alphanumeric run, drop stopwords.

    Duplicates are kept; term frequency matters downstream.
    """
    return [
        token
        for token in _TOKEN_SPLIT.split(text.lower())
        if token and token not in STOPWORDS
    ]


def feature_time_range(feature: Feature, granularity: Granularity) -> TimeRange:
    """Day range covered by a feature at the series' sample granularity.

    A point feature covers the full calendar period of its sample; an
    interval feature covers the periods of both endpoints and everything
    between.
    """
    if isinstance(feature.locus, PointLocus):
        return period_of(feature.locus.timestamp, granularity)
    start = period_of(feature.locus.start, granularity).start
    end = period_of(feature.locus.end, granularity).end
    return TimeRange(start, end)


@dataclass(frozen=True)
class FeatureDocument:
    """The headline set of one feature's day range, as a TF-IDF document."""

    range: TimeRange
    articles: tuple[ArticleRecord, ...]
    term_counts: Mapping[str, int]
    total_terms: int

    def __contains__(self, term: str) -> bool:
        return term in self.term_counts


@dataclass(frozen=True)
class DocumentCorpus:
    """One document per feature in {target} ∪ context."""

    documents: tuple[FeatureDocument, ...]
    target_index: int

    def __post_init__(self) -> None:
        if len(self.documents) < 2:
            raise EmptyContext(
                "a corpus needs the target document plus at least one other"
            )
        if not 0 <= self.target_index < len(self.documents):
            raise ValueError(f"target_index {self.target_index} out of range")

    @property
    def target(self) -> FeatureDocument:
        return self.documents[self.target_index]


@dataclass(frozen=True)
class ScoredHeadline:
    """One candidate annotation; rank 1 is the best-scoring headline."""

    article: ArticleRecord
    score: float
    rank: int


def build_document(
    store: HeadlineStore, time_range: TimeRange, keywords: Sequence[str]
) -> FeatureDocument:
    """Filter the store to one feature's range and count headline terms."""
    articles = query(store, time_range, keywords)
    counts: Counter[str] = Counter()
    for article in articles:
        counts.update(tokenize(article.headline))
    return FeatureDocument(
        range=time_range,
        articles=tuple(articles),
        term_counts=dict(counts),
        total_terms=sum(counts.values()),
    )


def term_frequency(term: str, document: FeatureDocument) -> float:
    """Relative frequency of a term among the document's headline tokens."""
    if document.total_terms == 0:
        raise EmptyDocument("document has no terms")
    return document.term_counts.get(term, 0) / document.total_terms


def inverse_document_frequency(term: str, corpus: DocumentCorpus) -> float:
    """Natural log of (document count / documents containing the term).

    The document count equals the number of features under consideration.
    Rankings are invariant to the log base, so natural log is as faithful
    as any.
    """
    containing = sum(1 for document in corpus.documents if term in document)
    if containing == 0:
        raise TermAbsentEverywhere(term)
    return math.log(len(corpus.documents) / containing)


def score_headline(
    article: ArticleRecord,
    target: FeatureDocument,
    corpus: DocumentCorpus,
) -> float:
    """Sum of per-token TF-IDF over the headline; repeated tokens count
    once per occurrence."""
    return sum(
        term_frequency(token, target) * inverse_document_frequency(token, corpus)
        for token in tokenize(article.headline)
    )


def build_corpus(
    target: Feature,
    context: Sequence[Feature],
    series: TimeSeries,
    store: HeadlineStore,
) -> DocumentCorpus:
    """Documents for {target} ∪ context, target first."""
    if not series.keywords:
        raise EmptyKeywords("series keywords are required for annotation requests")
    if not context:
        raise EmptyContext("at least one context feature is required")
    if target in context:
        raise InvalidFeature("target feature must not appear in the context set")
    ranges = [feature_time_range(f, series.granularity) for f in (target, *context)]
    documents = tuple(
        build_document(store, time_range, series.keywords) for time_range in ranges
    )
    return DocumentCorpus(documents=documents, target_index=0)


def get_annotations(
    target: Feature,
    context: Sequence[Feature],
    series: TimeSeries,
    store: HeadlineStore,
) -> list[ScoredHeadline]:
    """Ranked candidate headlines for the target feature.

    Scores every article in the target document against the corpus and
    ranks by score (ties: earlier publish date, then headline text, then
    id). An empty result is not an error: a feature whose range matched
    no articles simply stays unlabeled.
    """
    corpus = build_corpus(target, context, series, store)
    target_document = corpus.target
    if not target_document.articles:
        return []
    scored = [
        (score_headline(article, target_document, corpus), article)
        for article in target_document.articles
    ]
    scored.sort(
        key=lambda pair: (-pair[0], pair[1].publish_date, pair[1].headline, pair[1].id)
    )
    return [
        ScoredHeadline(article=article, score=score, rank=rank)
        for rank, (score, article) in enumerate(scored, start=1)
    ]
