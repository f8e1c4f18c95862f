"""Exception hierarchy shared across the package.

Plain file-system failures (missing paths, permissions) are left to the
builtin OSError family; everything domain-specific derives from
ChartnotesError so callers can catch one base class.
"""


class ChartnotesError(Exception):
    """Base class for all chartnotes errors."""


class EmptyInput(ChartnotesError, ValueError):
    """A loader received no data points at all."""


class TooShort(ChartnotesError, ValueError):
    """A series has fewer than the two samples every operation requires."""


class NonFiniteValue(ChartnotesError, ValueError):
    """A series value is NaN or infinite."""


class DuplicateTimestamp(ChartnotesError, ValueError):
    """Two raw points landed in the same granularity bucket."""


class MisalignedTimestamp(ChartnotesError, ValueError):
    """A timestamp does not sit on a granularity boundary."""


class InvalidFeature(ChartnotesError, ValueError):
    """A feature violates its structural invariants."""


class MalformedRecord(ChartnotesError, ValueError):
    """An article record is missing its headline or has an unparseable date."""


class StoreFileError(ChartnotesError, ValueError):
    """A store file is structurally broken (bad header, bad line, bad count)."""


class SchemaVersionMismatch(StoreFileError):
    """A store file declares a schema version this code does not read."""


class EmptyKeywords(ChartnotesError, ValueError):
    """A query or annotation request arrived without domain keywords."""


class EmptyContext(ChartnotesError, ValueError):
    """An annotation request arrived with no context features.

    With a single document every inverse-document-frequency term is
    log(1) = 0, so all scores degenerate to 0; the request is rejected
    instead.
    """


class EmptyDocument(ChartnotesError, ValueError):
    """Term frequencies were requested from a document with zero terms."""


class TermAbsentEverywhere(ChartnotesError, KeyError):
    """IDF was requested for a term that occurs in no document."""


class ArchiveError(ChartnotesError):
    """Base class for archive-client failures."""


class AuthError(ArchiveError):
    """No API key available, or the archive rejected the key."""


class RateLimited(ArchiveError):
    """The archive kept throttling after all retries were spent."""


class NetworkError(ArchiveError):
    """The archive could not be reached or returned an unusable response."""
