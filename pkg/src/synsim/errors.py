"""Exception types shared across the package.

Two families matter to callers: configuration problems (bad mode, bad
measure name, missing synonym table) and input problems (unreadable or
malformed files, unknown document ids). The CLI maps the first family to
exit code 64 and everything else to exit code 2.
"""


class SynsimError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(SynsimError):
    """Invalid configuration: unknown mode, measure, smoothing, or format."""


class LexiconFormatError(SynsimError):
    """A lexicon file does not follow its expected line format."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class CorpusError(SynsimError):
    """Problems assembling a corpus from input files."""


class EmptyCorpusError(CorpusError):
    """No documents were found where at least one is required."""


class DuplicateDocumentError(CorpusError):
    """Two input files map to the same document id."""


class UnknownDocumentError(CorpusError):
    """A requested document id is not present in the corpus."""


class ZeroDocumentFrequencyError(SynsimError):
    """A term has document frequency zero and smoothing is disabled."""

    def __init__(self, term):
        super().__init__(
            f"term {term!r} appears in no document; "
            "division by zero (enable plus_one_when_zero smoothing)"
        )
        self.term = term
