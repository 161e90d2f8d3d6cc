"""Text preparation: tokenize, normalize, drop stopwords, stem, count.

The stages are deliberately small pure functions so each can be tested in
isolation; ``preprocess`` chains them in a fixed order and reduces a raw
document to a bag of stemmed term counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import groupby
from typing import TYPE_CHECKING, Callable, Iterable, Mapping

if TYPE_CHECKING:
    from .lexicons import StemLexicon, StopwordList

# Optional hook for a rule-based stemmer: called on lexicon misses, may
# return None to decline the token.
RuleStemmer = Callable[[str], "str | None"]


@dataclass(frozen=True)
class RawDocument:
    """An unprocessed input text with a caller-chosen id."""

    id: str
    text: str


@dataclass(frozen=True)
class ProcessedDocument:
    """A document reduced to stemmed-term counts.

    ``total_tokens`` is the number of tokens that survived filtering, which
    equals the sum of all counts; it is the term-frequency denominator.
    """

    id: str
    counts: Mapping[str, int] = field(default_factory=dict)
    total_tokens: int = 0

    def __post_init__(self):
        if self.total_tokens != sum(self.counts.values()):
            raise ValueError(
                f"document {self.id!r}: total_tokens={self.total_tokens} "
                f"does not equal the sum of counts {sum(self.counts.values())}"
            )

    @classmethod
    def from_terms(cls, doc_id: str, terms: Iterable[str]) -> "ProcessedDocument":
        """Build directly from an iterable of already-stemmed terms."""
        counts: dict[str, int] = {}
        total = 0
        for term in terms:
            counts[term] = counts.get(term, 0) + 1
            total += 1
        return cls(id=doc_id, counts=counts, total_tokens=total)


def tokenize(text: str) -> list[str]:
    """Split text into maximal runs of Unicode letters.

    Punctuation, whitespace, and digit runs all act as separators and are
    discarded, so "a-b c7d" yields ["a", "b", "c", "d"].
    """
    return ["".join(run) for is_letter, run in groupby(text, key=str.isalpha) if is_letter]


def normalize(token: str) -> str:
    """Lowercase a token using the Unicode case tables.

    Covers the Cyrillic letters specific to Kazakh (Ә, Ғ, Қ, Ң, Ө, Ұ, Ү, Һ,
    І) as ordinary case pairs; nothing is transliterated.
    """
    return token.lower()


def filter_stopwords(tokens: Iterable[str], stopwords) -> list[str]:
    """Drop every token that is a member of ``stopwords``, keeping order."""
    return [t for t in tokens if t not in stopwords]


def stem(token: str, lexicon: "StemLexicon", rule_stemmer: RuleStemmer | None = None) -> str:
    """Reduce a normalized token to its stem.

    Lexicon hits win; on a miss the optional rule-based stemmer is consulted,
    and if it declines (or is absent) the token is returned unchanged.
    """
    mapped = lexicon.lookup(token)
    if mapped is not None:
        return mapped
    if rule_stemmer is not None:
        ruled = rule_stemmer(token)
        if ruled:
            return ruled
    return token


def preprocess(
    doc: RawDocument,
    stopwords: "StopwordList",
    lexicon: "StemLexicon",
    rule_stemmer: RuleStemmer | None = None,
) -> ProcessedDocument:
    """Run the full preparation chain on one document.

    Order is fixed: tokenize, normalize, remove stopwords, stem. Stopwords
    are matched on normalized surface forms, before stemming.
    """
    tokens = [normalize(t) for t in tokenize(doc.text)]
    kept = filter_stopwords(tokens, stopwords)
    stems = [stem(t, lexicon, rule_stemmer) for t in kept]
    return ProcessedDocument.from_terms(doc.id, stems)


def term_count(doc: ProcessedDocument, term: str) -> int:
    """Occurrences of ``term`` in ``doc`` (0 when absent)."""
    return doc.counts.get(term, 0)
