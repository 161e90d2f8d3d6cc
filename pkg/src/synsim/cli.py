"""Command-line front end.

Subcommands: sim, matrix, report, preprocess, vector. Exit codes are a
stable contract for scripting: 0 success, 2 input or lookup errors, 64
configuration errors. Flags override values from an optional JSON config
file (--config), which overrides built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError, CorpusError, SynsimError
from .evaluation import (
    ComparisonConfig,
    anchor_matrix,
    compare_pair,
    delta_summary,
    format_score,
    load_corpus,
    read_documents,
    render_report,
)
from .lexicons import (
    StemLexicon,
    StopwordList,
    SynonymTable,
    load_stem_lexicon,
    load_stopwords,
    load_synonym_table,
)
from .pipeline import RawDocument, normalize, preprocess, stem, tokenize
from .similarity import MEASURES
from .weighting import SMOOTHINGS, WeightingConfig, vectorize

MODES = ("traditional", "modified", "both")
FORMATS = ("json", "csv")
WEIGHTED_COMMANDS = ("sim", "matrix", "report", "vector")

DEFAULTS = {
    "mode": "both",
    "measures": list(MEASURES),
    "smoothing": "plus_one_when_zero",
    "format": "json",
    "modified_idf": "resolved",
}

CONFIG_FILE_KEYS = (
    "stopwords",
    "stems",
    "synonyms",
    "mode",
    "measures",
    "smoothing",
    "format",
    "out",
    "modified_idf",
)


class UsageError(ConfigError):
    """Raised for bad flags so main() can map them to exit code 64."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CliConfig:
    stopwords_path: str
    stems_path: str
    synonyms_path: str | None
    mode: str
    measures: list[str]
    smoothing: str
    output_format: str
    output_path: str | None
    modified_idf: str


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="synsim",
        description="Text document similarity with synonym-aware TF-IDF.",
    )
    common = _Parser(add_help=False)
    common.add_argument("--stopwords", help="stopword file, one word per line")
    common.add_argument("--stems", help="surface-to-stem TSV file")
    common.add_argument("--synonyms", help="synonym table file, one row per line")
    common.add_argument("--mode", choices=MODES)
    common.add_argument("--measures", help="comma-separated subset of cosine,jaccard,dice")
    common.add_argument("--smoothing", choices=SMOOTHINGS)
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--config", help="JSON config file; flags override it")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sim", parents=[common], help="compare two documents")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("corpus_dir", help="directory supplying the IDF collection")

    p = sub.add_parser("matrix", parents=[common], help="one anchor against the rest")
    p.add_argument("corpus_dir")
    p.add_argument("anchor_id")

    p = sub.add_parser(
        "report", parents=[common], help="similar/dissimilar delta summary"
    )
    p.add_argument("similar_dir")
    p.add_argument("dissimilar_dir")
    p.add_argument("anchor_id")

    p = sub.add_parser("preprocess", parents=[common], help="show the token trace")
    p.add_argument("file")

    p = sub.add_parser("vector", parents=[common], help="dump a document's weights")
    p.add_argument("corpus_dir")
    p.add_argument("doc_id")

    return parser


def _parse_measures(value) -> list[str]:
    if isinstance(value, str):
        value = [m.strip() for m in value.split(",") if m.strip()]
    measures = list(dict.fromkeys(value))
    if not measures:
        raise ConfigError("at least one measure is required")
    for measure in measures:
        if measure not in MEASURES:
            raise ConfigError(
                f"unknown measure {measure!r}; expected a subset of {MEASURES}"
            )
    return measures


def _load_config_file(path) -> dict:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    for key in data:
        if key not in CONFIG_FILE_KEYS:
            raise ConfigError(f"unknown config file key {key!r}")
    return data


def resolve_config(args: argparse.Namespace) -> CliConfig:
    """Merge flags over config-file values over defaults, then validate."""
    from_file = _load_config_file(args.config) if args.config else {}

    def pick(flag_value, file_key, default=None):
        if flag_value is not None:
            return flag_value
        if file_key in from_file:
            return from_file[file_key]
        return default

    mode = pick(args.mode, "mode", DEFAULTS["mode"])
    if mode not in MODES:
        raise ConfigError(f"unknown mode {mode!r}; expected one of {MODES}")
    smoothing = pick(args.smoothing, "smoothing", DEFAULTS["smoothing"])
    if smoothing not in SMOOTHINGS:
        raise ConfigError(
            f"unknown smoothing {smoothing!r}; expected one of {SMOOTHINGS}"
        )
    output_format = pick(args.format, "format", DEFAULTS["format"])
    if output_format not in FORMATS:
        raise ConfigError(
            f"unknown format {output_format!r}; expected one of {FORMATS}"
        )
    modified_idf = from_file.get("modified_idf", DEFAULTS["modified_idf"])
    if modified_idf not in ("resolved", "raw"):
        raise ConfigError(
            f"unknown modified_idf {modified_idf!r}; expected 'resolved' or 'raw'"
        )
    measures = _parse_measures(pick(args.measures, "measures", DEFAULTS["measures"]))

    stopwords_path = pick(args.stopwords, "stopwords")
    stems_path = pick(args.stems, "stems")
    if not stopwords_path:
        raise ConfigError("--stopwords is required")
    if not stems_path:
        raise ConfigError("--stems is required")

    return CliConfig(
        stopwords_path=stopwords_path,
        stems_path=stems_path,
        synonyms_path=pick(args.synonyms, "synonyms"),
        mode=mode,
        measures=measures,
        smoothing=smoothing,
        output_format=output_format,
        output_path=pick(args.out, "out"),
        modified_idf=modified_idf,
    )


@dataclass
class _Resources:
    stopwords: StopwordList
    lexicon: StemLexicon
    synonym_table: SynonymTable | None


def _load_resources(cfg: CliConfig) -> _Resources:
    _require_file(cfg.stopwords_path)
    _require_file(cfg.stems_path)
    stopwords = load_stopwords(cfg.stopwords_path)
    lexicon = load_stem_lexicon(cfg.stems_path)
    table = None
    if cfg.synonyms_path:
        _require_file(cfg.synonyms_path)
        table = load_synonym_table(cfg.synonyms_path, lexicon)
    return _Resources(stopwords=stopwords, lexicon=lexicon, synonym_table=table)


def _require_file(path):
    if not Path(path).is_file():
        raise CorpusError(f"not a readable file: {path}")


def _comparison_config(cfg: CliConfig) -> ComparisonConfig:
    return ComparisonConfig(smoothing=cfg.smoothing, modified_idf=cfg.modified_idf)


def _emit(cfg: CliConfig, text: str) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_sim(cfg: CliConfig, file_a, file_b, corpus_dir) -> int:
    _require_file(file_a)
    _require_file(file_b)
    resources = _load_resources(cfg)
    corpus = load_corpus(
        corpus_dir, resources.stopwords, resources.lexicon, resources.synonym_table
    )
    id_a, id_b = Path(file_a).stem, Path(file_b).stem
    comparison = _comparison_config(cfg)
    lines = []
    for measure in cfg.measures:
        result = compare_pair(corpus, id_a, id_b, measure, comparison)
        fields = [measure]
        if cfg.mode in ("traditional", "both"):
            fields.append(f"traditional={format_score(result.traditional)}")
        if cfg.mode in ("modified", "both"):
            fields.append(f"modified={format_score(result.modified)}")
        if cfg.mode == "both":
            fields.append(f"delta={format_score(result.delta)}")
        lines.append(" ".join(fields))
    _emit(cfg, "".join(line + "\n" for line in lines))
    return 0


def _targets(corpus_ids, anchor_id) -> list[str]:
    return [doc_id for doc_id in corpus_ids if doc_id != anchor_id]


def cmd_matrix(cfg: CliConfig, corpus_dir, anchor_id) -> int:
    resources = _load_resources(cfg)
    corpus = load_corpus(
        corpus_dir, resources.stopwords, resources.lexicon, resources.synonym_table
    )
    corpus.document(anchor_id)
    table = anchor_matrix(
        corpus,
        anchor_id,
        _targets(corpus.ids, anchor_id),
        cfg.measures,
        _comparison_config(cfg),
    )
    _emit(cfg, render_report(table, cfg.output_format))
    return 0


def cmd_report(cfg: CliConfig, similar_dir, dissimilar_dir, anchor_id) -> int:
    resources = _load_resources(cfg)
    similar_ids = [d.id for d in read_documents(similar_dir)]
    dissimilar_ids = [d.id for d in read_documents(dissimilar_dir)]
    corpus = load_corpus(
        [similar_dir, dissimilar_dir],
        resources.stopwords,
        resources.lexicon,
        resources.synonym_table,
    )
    corpus.document(anchor_id)
    comparison = _comparison_config(cfg)
    similar = anchor_matrix(
        corpus, anchor_id, _targets(similar_ids, anchor_id), cfg.measures, comparison
    )
    dissimilar = anchor_matrix(
        corpus, anchor_id, _targets(dissimilar_ids, anchor_id), cfg.measures, comparison
    )
    summary = delta_summary(similar, dissimilar)
    _emit(cfg, render_report(summary, cfg.output_format))
    return 0


def cmd_preprocess(cfg: CliConfig, file) -> int:
    _require_file(file)
    resources = _load_resources(cfg)
    text = Path(file).read_text(encoding="utf-8")
    doc = RawDocument(id=Path(file).stem, text=text)
    lines = []
    for token in tokenize(text):
        norm = normalize(token)
        if norm in resources.stopwords:
            lines.append(f"{token}\t{norm}\t(stopword)")
        else:
            lines.append(f"{token}\t{norm}\t{stem(norm, resources.lexicon)}")
    processed = preprocess(doc, resources.stopwords, resources.lexicon)
    lines.append("")
    lines.append("counts:")
    for term in sorted(processed.counts):
        lines.append(f"{term}\t{processed.counts[term]}")
    lines.append(f"total_tokens\t{processed.total_tokens}")
    _emit(cfg, "".join(line + "\n" for line in lines))
    return 0


def cmd_vector(cfg: CliConfig, corpus_dir, doc_id) -> int:
    resources = _load_resources(cfg)
    corpus = load_corpus(
        corpus_dir, resources.stopwords, resources.lexicon, resources.synonym_table
    )
    doc = corpus.document(doc_id)
    vocabulary = tuple(sorted(doc.counts))
    lines = []
    traditional = modified = None
    if cfg.mode in ("traditional", "both"):
        traditional = vectorize(
            doc, corpus, vocabulary, WeightingConfig(mode="traditional", smoothing=cfg.smoothing)
        )
    if cfg.mode in ("modified", "both"):
        modified = vectorize(
            doc,
            corpus,
            vocabulary,
            WeightingConfig(
                mode="modified",
                smoothing=cfg.smoothing,
                synonym_table=corpus.synonym_table or SynonymTable.empty(),
                modified_idf=cfg.modified_idf,
            ),
        )
    for term in vocabulary:
        fields = [term]
        if traditional is not None:
            fields.append(f"traditional={format_score(traditional.get(term))}")
        if modified is not None:
            fields.append(f"modified={format_score(modified.get(term))}")
        lines.append(" ".join(fields))
    _emit(cfg, "".join(line + "\n" for line in lines))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"synsim: error: {exc}", file=sys.stderr)
        return 64
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        cfg = resolve_config(args)
        if args.command in WEIGHTED_COMMANDS and cfg.mode in ("modified", "both"):
            if not cfg.synonyms_path:
                raise ConfigError(
                    f"mode {cfg.mode!r} requires --synonyms (or a synonyms entry "
                    "in the config file)"
                )
        if args.command == "sim":
            return cmd_sim(cfg, args.file_a, args.file_b, args.corpus_dir)
        if args.command == "matrix":
            return cmd_matrix(cfg, args.corpus_dir, args.anchor_id)
        if args.command == "report":
            return cmd_report(cfg, args.similar_dir, args.dissimilar_dir, args.anchor_id)
        if args.command == "preprocess":
            return cmd_preprocess(cfg, args.file)
        if args.command == "vector":
            return cmd_vector(cfg, args.corpus_dir, args.doc_id)
        raise ConfigError(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"synsim: error: {exc}", file=sys.stderr)
        return 64
    except (SynsimError, OSError, UnicodeDecodeError) as exc:
        print(f"synsim: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
