"""Loading and indexing of the three lexical resources.

All three file formats are UTF-8 text, one entry per line, with blank lines
and ``#`` comment lines ignored:

* stopwords: one word per line
* stem lexicon: ``surface<TAB>stem`` per line, later duplicates win
* synonym table: one comma-separated row of mutually synonymous words per
  line; entries are normalized and stemmed at load so the table lives in
  the same term space as processed documents

Loaded structures are immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .errors import LexiconFormatError
from .pipeline import RuleStemmer, normalize, stem


@dataclass(frozen=True)
class StopwordList:
    """Set of normalized surface forms to be removed before weighting."""

    words: frozenset[str] = frozenset()

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class StemLexicon:
    """Mapping from normalized surface form to its stem."""

    entries: dict[str, str] = field(default_factory=dict)

    def lookup(self, surface: str) -> str | None:
        """The stem for ``surface``, or None when the form is not listed."""
        return self.entries.get(surface)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class SynonymRow:
    """One row of the synonym table: an ordered group of distinct stems."""

    terms: tuple[str, ...]
    row_index: int


@dataclass(frozen=True)
class SynonymTable:
    """Ordered synonym rows plus a term-to-row index.

    A term appearing in several rows is indexed at the lowest row, and a
    lookup matches the term anywhere in a row, not only at position 0.
    """

    rows: tuple[SynonymRow, ...] = ()
    index: dict[str, int] = field(default_factory=dict)

    @classmethod
    def empty(cls) -> "SynonymTable":
        return cls()

    def __len__(self) -> int:
        return len(self.rows)

    def __contains__(self, term: str) -> bool:
        return term in self.index

    def row_of(self, term: str) -> SynonymRow | None:
        """The lowest-index row containing ``term``, or None."""
        i = self.index.get(term)
        return None if i is None else self.rows[i]

    def candidates(self, term: str) -> tuple[str, ...]:
        """Alias for :func:`synonym_candidates` as a method."""
        return synonym_candidates(self, term)


def synonym_candidates(table: SynonymTable, term: str) -> tuple[str, ...]:
    """Synonyms to try for ``term``, in row position order, term excluded.

    Empty when the term occurs in no row.
    """
    row = table.row_of(term)
    if row is None:
        return ()
    return tuple(t for t in row.terms if t != term)


def _open_lines(source) -> Iterator[str]:
    if isinstance(source, (str, Path)):
        # Decode errors surface as UnicodeDecodeError with the byte offset.
        text = Path(source).read_text(encoding="utf-8")
        return iter(text.splitlines())
    return iter(source.read().splitlines())


def _content_lines(source) -> Iterator[tuple[int, str]]:
    """Numbered lines with blanks and # comments removed."""
    for number, raw in enumerate(_open_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def load_stopwords(source) -> StopwordList:
    """Read a stopword file: one word per line, normalized, deduplicated."""
    words = {normalize(line) for _, line in _content_lines(source)}
    return StopwordList(words=frozenset(words))


def load_stem_lexicon(source) -> StemLexicon:
    """Read a surface-to-stem TSV; the last entry for a surface form wins."""
    entries: dict[str, str] = {}
    for number, line in _content_lines(source):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconFormatError(
                f"expected exactly one TAB in {line!r}", line_number=number
            )
        surface, target = (normalize(p.strip()) for p in parts)
        if not surface or not target:
            raise LexiconFormatError(
                f"empty surface or stem in {line!r}", line_number=number
            )
        entries[surface] = target
    return StemLexicon(entries=entries)


def load_synonym_table(
    source,
    lexicon: StemLexicon | None = None,
    rule_stemmer: RuleStemmer | None = None,
) -> SynonymTable:
    """Read a synonym file into stem space.

    Each line is split on commas; every word is normalized and stemmed with
    the given lexicon, then deduplicated keeping first occurrence. Rows left
    with fewer than two distinct terms can never fire and are dropped. The
    index resolves multi-row terms to the lowest retained row.
    """
    lexicon = lexicon or StemLexicon()
    rows: list[SynonymRow] = []
    index: dict[str, int] = {}
    for _, line in _content_lines(source):
        words = [w.strip() for w in line.split(",")]
        terms: list[str] = []
        for word in words:
            if not word:
                continue
            term = stem(normalize(word), lexicon, rule_stemmer)
            if term and term not in terms:
                terms.append(term)
        if len(terms) < 2:
            continue
        row = SynonymRow(terms=tuple(terms), row_index=len(rows))
        rows.append(row)
        for term in terms:
            index.setdefault(term, row.row_index)
    return SynonymTable(rows=tuple(rows), index=index)
