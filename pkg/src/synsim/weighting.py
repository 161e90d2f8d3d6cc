"""TF-IDF document vectors, traditional and synonym-aware.

The synonym-aware ("modified") scheme changes how a term's occurrence count
in a document is obtained. When the raw count is positive it is used as is
and synonyms are never consulted. When it is zero, the term's synonym row
is walked in position order and the count of the first synonym that occurs
in the document is substituted; if none occurs the count stays zero. The
resolved count feeds both components of the weight:

* term frequency uses the resolved count over the document's unchanged
  token total;
* document frequency counts a document whenever its resolved count for the
  term is positive, so a term "appears" in every document that contains
  any of its synonyms.

With an empty synonym table both schemes coincide exactly.

Weights are ``tf * log2(|D| / df)``. Since df never exceeds the corpus
size, weights are nonnegative. A df of zero (a term absent from the whole
corpus, synonyms included) is handled by the ``smoothing`` setting: the
default ``plus_one_when_zero`` replaces the zero denominator with one,
while ``none`` raises.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Literal, Mapping, Sequence

from .errors import (
    ConfigError,
    DuplicateDocumentError,
    EmptyCorpusError,
    UnknownDocumentError,
    ZeroDocumentFrequencyError,
)
from .lexicons import SynonymTable, synonym_candidates
from .pipeline import ProcessedDocument, term_count

Mode = Literal["traditional", "modified"]
Smoothing = Literal["plus_one_when_zero", "none"]

MODES = ("traditional", "modified")
SMOOTHINGS = ("plus_one_when_zero", "none")


@dataclass(frozen=True)
class WeightingConfig:
    """How document vectors are to be built.

    ``modified_idf`` selects the document-frequency flavor used by the
    modified scheme: "resolved" (default) counts synonym hits into df,
    "raw" keeps the traditional df while only term frequency changes.
    """

    mode: Mode = "traditional"
    smoothing: Smoothing = "plus_one_when_zero"
    synonym_table: SynonymTable | None = None
    modified_idf: Literal["resolved", "raw"] = "resolved"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.smoothing not in SMOOTHINGS:
            raise ConfigError(
                f"unknown smoothing {self.smoothing!r}; expected one of {SMOOTHINGS}"
            )
        if self.modified_idf not in ("resolved", "raw"):
            raise ConfigError(
                f"unknown modified_idf {self.modified_idf!r}; "
                "expected 'resolved' or 'raw'"
            )
        if self.mode == "modified" and self.synonym_table is None:
            raise ConfigError("mode 'modified' requires a synonym table")


@dataclass(frozen=True)
class ResolvedCount:
    """Occurrence count after synonym resolution.

    ``matched_term`` names the synonym that supplied the count; it is None
    when the count came from the term itself or is zero.
    """

    count: int
    matched_term: str | None = None


class Corpus:
    """An ordered, immutable collection of processed documents.

    Document frequencies for both schemes are answered from an inverted
    term-to-documents index built once at construction, so concurrent
    readers never race on lazily filled caches.
    """

    def __init__(
        self,
        docs: Iterable[ProcessedDocument],
        synonym_table: SynonymTable | None = None,
    ):
        self.docs: tuple[ProcessedDocument, ...] = tuple(docs)
        if not self.docs:
            raise EmptyCorpusError("a corpus needs at least one document")
        self.synonym_table = synonym_table
        self._by_id: dict[str, ProcessedDocument] = {}
        for doc in self.docs:
            if doc.id in self._by_id:
                raise DuplicateDocumentError(f"duplicate document id {doc.id!r}")
            self._by_id[doc.id] = doc
        postings: dict[str, set[str]] = {}
        for doc in self.docs:
            for term in doc.counts:
                postings.setdefault(term, set()).add(doc.id)
        self._postings: dict[str, frozenset[str]] = {
            term: frozenset(ids) for term, ids in postings.items()
        }

    @property
    def size(self) -> int:
        return len(self.docs)

    def __len__(self) -> int:
        return len(self.docs)

    def __iter__(self):
        return iter(self.docs)

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self._by_id

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(d.id for d in self.docs)

    @property
    def vocabulary(self) -> frozenset[str]:
        return frozenset(self._postings)

    def document(self, doc_id: str) -> ProcessedDocument:
        try:
            return self._by_id[doc_id]
        except KeyError:
            raise UnknownDocumentError(f"no document with id {doc_id!r}") from None

    def documents_with(self, term: str) -> frozenset[str]:
        """Ids of documents in which ``term`` literally occurs."""
        return self._postings.get(term, frozenset())


def resolve_count(
    term: str,
    doc: ProcessedDocument,
    table: SynonymTable | None,
) -> ResolvedCount:
    """Occurrence count of ``term`` in ``doc``, falling back to synonyms.

    A positive raw count short-circuits; otherwise the term's synonym row
    is tried in position order and the first synonym with a positive count
    wins. No synonym row, or no synonym present, yields zero.
    """
    own = term_count(doc, term)
    if own > 0:
        return ResolvedCount(count=own)
    if table is not None:
        for candidate in synonym_candidates(table, term):
            count = term_count(doc, candidate)
            if count > 0:
                return ResolvedCount(count=count, matched_term=candidate)
    return ResolvedCount(count=0)


def tf(count: int, total_tokens: int) -> float:
    """Term frequency: count over document size, 0 for an empty document."""
    if total_tokens == 0:
        return 0.0
    return count / total_tokens


def document_frequency(
    corpus: Corpus,
    term: str,
    mode: Mode = "traditional",
    table: SynonymTable | None = None,
) -> int:
    """Number of corpus documents in which ``term`` appears.

    Traditional mode counts literal occurrences. Modified mode counts a
    document when the term's resolved count there is positive, i.e. when
    the document contains the term or any synonym from its row; this never
    shrinks the traditional value.
    """
    if mode == "traditional":
        return len(corpus.documents_with(term))
    if mode != "modified":
        raise ConfigError(f"unknown mode {mode!r}; expected one of {MODES}")
    if table is None:
        table = corpus.synonym_table or SynonymTable.empty()
    matching = set(corpus.documents_with(term))
    for candidate in synonym_candidates(table, term):
        matching |= corpus.documents_with(candidate)
    return len(matching)


def idf(
    corpus: Corpus,
    term: str,
    mode: Mode = "traditional",
    smoothing: Smoothing = "plus_one_when_zero",
    table: SynonymTable | None = None,
) -> float:
    """Inverse document frequency, log base 2.

    The denominator is the document frequency; only when it is zero does
    ``plus_one_when_zero`` substitute one (always adding one would push
    corpus-wide terms to negative weight).
    """
    df = document_frequency(corpus, term, mode, table)
    if df == 0:
        if smoothing == "plus_one_when_zero":
            df = 1
        elif smoothing == "none":
            raise ZeroDocumentFrequencyError(term)
        else:
            raise ConfigError(
                f"unknown smoothing {smoothing!r}; expected one of {SMOOTHINGS}"
            )
    return math.log2(corpus.size / df)


def build_vocabulary(a: ProcessedDocument, b: ProcessedDocument) -> tuple[str, ...]:
    """Shared component order for a document pair: sorted union of terms."""
    return tuple(sorted(set(a.counts) | set(b.counts)))


@dataclass(frozen=True)
class DocumentVector:
    """Sparse TF-IDF vector; terms missing from ``weights`` are zero.

    ``vocabulary`` fixes the component order used when two vectors are
    combined; it is the sorted union of the compared documents' terms.
    """

    doc_id: str
    weights: Mapping[str, float] = field(default_factory=dict)
    vocabulary: tuple[str, ...] = ()

    def get(self, term: str) -> float:
        return self.weights.get(term, 0.0)


def vectorize(
    doc: ProcessedDocument,
    corpus: Corpus,
    vocabulary: Sequence[str],
    config: WeightingConfig,
) -> DocumentVector:
    """TF-IDF vector of ``doc`` over ``vocabulary``.

    In modified mode the synonym-resolved count feeds tf, and idf uses the
    resolved document frequency (unless ``modified_idf`` is "raw"). Zero
    weights are not stored.
    """
    modified = config.mode == "modified"
    df_mode: Mode = "traditional"
    if modified and config.modified_idf == "resolved":
        df_mode = "modified"
    weights: dict[str, float] = {}
    for term in vocabulary:
        if modified:
            count = resolve_count(term, doc, config.synonym_table).count
        else:
            count = term_count(doc, term)
        if count == 0:
            continue
        weight = tf(count, doc.total_tokens) * idf(
            corpus, term, df_mode, config.smoothing, config.synonym_table
        )
        if weight != 0.0:
            weights[term] = weight
    return DocumentVector(doc_id=doc.id, weights=weights, vocabulary=tuple(vocabulary))
