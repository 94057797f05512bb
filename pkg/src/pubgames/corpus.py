"""Publication-metadata ingestion and indexing.

The corpus file is UTF-8 CSV with RFC-4180 quoting and the exact header
``title,authors,year,venue,doi,url``. The ``authors`` field holds names
joined by ``|``; ``doi`` and ``url`` may be empty. One load produces an
immutable snapshot whose orderings depend only on the file bytes, so a
given (corpus, seed) pair always names the same puzzle.
"""

from __future__ import annotations

import csv
import io
import re
import unicodedata
from dataclasses import dataclass, field

from .errors import (
    BadField,
    BadInput,
    CorpusError,
    DuplicateHeader,
    MalformedCsv,
    MissingHeader,
)

HEADER = ("title", "authors", "year", "venue", "doi", "url")

_YEAR_RE = re.compile(r"^[0-9]{4}$")


def normalize_name(raw: str) -> str:
    """Canonical form of a metadata text field.

    Unicode NFC, outer whitespace trimmed, internal whitespace runs
    collapsed to a single space. Used for author names (which are
    compared by exact normalized string) and for titles and venues.
    May return "" — callers reject empties where the field is required.
    """
    return " ".join(unicodedata.normalize("NFC", raw).split())


def colon_split(title: str) -> tuple[str, str] | None:
    """Split a normalized title at its first colon.

    Returns (prefix, suffix) with the suffix's leading whitespace
    trimmed, or None when the title has no colon or either part would
    be empty. Multi-colon titles keep the later colons in the suffix.
    """
    idx = title.find(":")
    if idx == -1:
        return None
    prefix = title[:idx]
    suffix = title[idx + 1:].lstrip()
    if not prefix or not suffix:
        return None
    return prefix, suffix


@dataclass(frozen=True)
class PaperRecord:
    """One publication, id = zero-based position in file order."""

    id: int
    title: str
    authors: tuple[str, ...]
    year: int
    venue: str
    doi: str | None = None
    url: str | None = None


@dataclass(frozen=True)
class Corpus:
    """Immutable indexed snapshot of one corpus file.

    eligible_authors holds every normalized name with at least three
    papers, sorted by UTF-8 byte order; colon_eligible holds the ids of
    papers whose title admits a colon split, ascending.
    """

    papers: tuple[PaperRecord, ...]
    author_index: dict[str, tuple[int, ...]] = field(repr=False)
    colon_eligible: tuple[int, ...] = field(repr=False)
    eligible_authors: tuple[str, ...] = field(repr=False)

    def paper(self, paper_id: int) -> PaperRecord:
        if not 0 <= paper_id < len(self.papers):
            raise BadInput(f"unknown paper id {paper_id}")
        return self.papers[paper_id]

    def author_papers(self, name: str) -> tuple[int, ...]:
        return self.author_index[name]

    def to_jsonable(self) -> dict:
        """Plain-data snapshot; equal snapshots mean equal corpora."""
        return {
            "papers": [
                {
                    "id": p.id,
                    "title": p.title,
                    "authors": list(p.authors),
                    "year": p.year,
                    "venue": p.venue,
                    "doi": p.doi,
                    "url": p.url,
                }
                for p in self.papers
            ],
            "author_index": {a: list(ids) for a, ids in self.author_index.items()},
            "colon_eligible": list(self.colon_eligible),
            "eligible_authors": list(self.eligible_authors),
        }


def _parse_record(row_idx: int, fields: list[str]) -> PaperRecord:
    if len(fields) != len(HEADER):
        raise MalformedCsv(row_idx, f"expected {len(HEADER)} columns, got {len(fields)}")
    raw_title, raw_authors, raw_year, raw_venue, raw_doi, raw_url = fields

    title = normalize_name(raw_title)
    if not title:
        raise BadField(row_idx, "title", "empty title")

    authors = tuple(normalize_name(a) for a in raw_authors.split("|"))
    if not authors or any(not a for a in authors):
        raise BadField(row_idx, "authors", "empty author name")
    if len(set(authors)) != len(authors):
        raise BadField(row_idx, "authors", "duplicate author within one record")

    year_text = raw_year.strip()
    if not _YEAR_RE.match(year_text):
        raise BadField(row_idx, "year", f"not a 4-digit year: {raw_year!r}")
    year = int(year_text)
    if not 1900 <= year <= 2100:
        raise BadField(row_idx, "year", f"year {year} outside 1900..2100")

    return PaperRecord(
        id=row_idx,
        title=title,
        authors=authors,
        year=year,
        venue=normalize_name(raw_venue),
        doi=raw_doi.strip() or None,
        url=raw_url.strip() or None,
    )


def _iter_records(data: bytes, errors: list[CorpusError] | None):
    """Yield PaperRecord per data row.

    With errors=None the first violation raises; otherwise violations
    are collected and bad rows skipped (record ids still count every
    data row so diagnostics match file positions).
    """
    try:
        text = data.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise MalformedCsv(-1, f"not valid UTF-8: {exc}") from None

    reader = csv.reader(io.StringIO(text, newline=""))
    row_idx = -1  # header occupies no record slot
    try:
        header = next(reader, None)
        if header is None:
            raise MissingHeader("empty file: missing header row")
        if tuple(header) != HEADER:
            if len(header) != len(set(header)):
                raise DuplicateHeader(f"duplicate column in header: {header}")
            raise MissingHeader(
                f"header must be exactly {','.join(HEADER)}, got {','.join(header)}"
            )
        for row_idx, fields in enumerate(reader):
            try:
                yield _parse_record(row_idx, fields)
            except CorpusError as exc:
                if errors is None:
                    raise
                errors.append(exc)
    except csv.Error as exc:
        broken = MalformedCsv(row_idx + 1, f"csv parse error: {exc}")
        if errors is None:
            raise broken from None
        errors.append(broken)


def _build(records: list[PaperRecord]) -> Corpus:
    by_author: dict[str, list[int]] = {}
    colon_ids: list[int] = []
    for rec in records:
        for name in rec.authors:
            by_author.setdefault(name, []).append(rec.id)
        if colon_split(rec.title) is not None:
            colon_ids.append(rec.id)

    author_index = {name: tuple(sorted(ids)) for name, ids in by_author.items()}
    eligible = sorted(
        (n for n, ids in author_index.items() if len(ids) >= 3),
        key=lambda n: n.encode("utf-8"),
    )
    return Corpus(
        papers=tuple(records),
        author_index=author_index,
        colon_eligible=tuple(sorted(colon_ids)),
        eligible_authors=tuple(eligible),
    )


def load_corpus(data: bytes) -> Corpus:
    """Parse and index a corpus file, raising on the first violation."""
    return _build(list(_iter_records(data, errors=None)))


def validate_corpus(data: bytes) -> list[CorpusError]:
    """Collect every row-level violation instead of stopping at the first.

    Header-level failures still end the scan (nothing after them is
    trustworthy). An empty list means load_corpus would succeed.
    """
    errors: list[CorpusError] = []
    try:
        for _ in _iter_records(data, errors=errors):
            pass
    except (MissingHeader, DuplicateHeader, MalformedCsv) as exc:
        errors.append(exc)
    return errors
