"""Chart annotation toolkit: persistence-based feature detection for time
series plus corpus-backed headline ranking for the detected features.
"""

from .errors import (
    ArchiveError,
    AuthError,
    ChartnotesError,
    DuplicateTimestamp,
    EmptyContext,
    EmptyDocument,
    EmptyInput,
    EmptyKeywords,
    InvalidFeature,
    MalformedRecord,
    MisalignedTimestamp,
    NetworkError,
    NonFiniteValue,
    RateLimited,
    SchemaVersionMismatch,
    StoreFileError,
    TermAbsentEverywhere,
    TooShort,
)
from .model import (
    GLOBAL,
    Feature,
    FeatureKind,
    Granularity,
    IntervalLocus,
    PointLocus,
    TimeRange,
    TimeSeries,
    normalize_series,
    period_of,
    read_points_csv,
    snap_date,
)
from .detector import (
    KERNEL,
    PersistencePair,
    detect_features,
    persistence_pairs,
    pure_python_pairs,
)
from .recommender import (
    DocumentCorpus,
    FeatureDocument,
    ScoredHeadline,
    build_corpus,
    build_document,
    feature_time_range,
    get_annotations,
    inverse_document_frequency,
    score_headline,
    term_frequency,
    tokenize,
)
from .store import (
    ArticleRecord,
    HeadlineStore,
    ingest,
    load_store,
    parse_raw_record,
    query,
    save_store,
)

__version__ = "0.1.0"

__all__ = [
    "ArchiveError",
    "ArticleRecord",
    "AuthError",
    "ChartnotesError",
    "DocumentCorpus",
    "DuplicateTimestamp",
    "EmptyContext",
    "EmptyDocument",
    "EmptyInput",
    "EmptyKeywords",
    "Feature",
    "FeatureDocument",
    "FeatureKind",
    "GLOBAL",
    "Granularity",
    "HeadlineStore",
    "IntervalLocus",
    "InvalidFeature",
    "KERNEL",
    "MalformedRecord",
    "MisalignedTimestamp",
    "NetworkError",
    "NonFiniteValue",
    "PersistencePair",
    "PointLocus",
    "RateLimited",
    "ScoredHeadline",
    "SchemaVersionMismatch",
    "StoreFileError",
    "TermAbsentEverywhere",
    "TimeRange",
    "TimeSeries",
    "TooShort",
    "build_corpus",
    "build_document",
    "detect_features",
    "feature_time_range",
    "get_annotations",
    "ingest",
    "inverse_document_frequency",
    "load_store",
    "normalize_series",
    "parse_raw_record",
    "period_of",
    "persistence_pairs",
    "pure_python_pairs",
    "query",
    "read_points_csv",
    "save_store",
    "score_headline",
    "snap_date",
    "term_frequency",
    "tokenize",
    "__version__",
]
