"""Exception types shared across the package."""


class PubgamesError(Exception):
    """Base class for all errors raised by this package."""


class CorpusError(PubgamesError):
    """Base class for corpus ingestion failures."""


class MissingHeader(CorpusError):
    """Header row absent or not exactly the required column list."""


class DuplicateHeader(CorpusError):
    """Header row names the same column more than once."""


class MalformedCsv(CorpusError):
    """Structural CSV violation: bad quoting or wrong column count.

    ``row`` is the zero-based data-record index (matching paper ids);
    -1 means the failure is not attributable to a single record.
    """

    def __init__(self, row: int, message: str):
        super().__init__(f"row {row}: {message}")
        self.row = row


class BadField(CorpusError):
    """A field value violates the record contract (empty title, bad year...)."""

    def __init__(self, row: int, column: str, message: str):
        super().__init__(f"row {row}, column {column!r}: {message}")
        self.row = row
        self.column = column


class InsufficientPopulation(PubgamesError):
    """Asked to sample more distinct items than the population holds."""


class CorpusTooSmall(PubgamesError):
    """The corpus cannot support the requested puzzle type."""


class GenerationExhausted(PubgamesError):
    """Candidate rejection limit reached without an acceptable puzzle."""


class BadInput(PubgamesError):
    """Invalid argument to a library operation."""


class NotCompleted(PubgamesError):
    """Share card requested for a game that is not finished."""
