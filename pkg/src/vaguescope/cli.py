"""Command-line interface tying the scoring pipeline together.

Subcommands: score, corpus, compare, features, train, eval, curve,
export-pairs, merge-lexicon.  All outputs are written atomically and
are bitwise-deterministic for identical inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Optional, Sequence

from vaguescope import classify, corpus as corpus_mod
from vaguescope.entities import ingest_annotations
from vaguescope.lexicon import Lexicon, LexiconError, load_lexicon, merge_lexicons
from vaguescope.matcher import load_tables
from vaguescope.scoring import SCHEMA_VERSION, analyze_text, build_report, data_path

DEFAULT_SEED = 42


class CliError(Exception):
    pass


def _atomic_write(path: Path, content: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(out: Optional[str], content: str) -> None:
    if out:
        _atomic_write(Path(out), content)
    else:
        sys.stdout.write(content)


def _load_lexicons(args) -> Lexicon:
    paths = args.lexicon or []
    if not paths:
        merged = load_lexicon(data_path(f"lexicon_{args.lang}.tsv"), args.lang)
    else:
        merged = load_lexicon(paths[0], args.lang)
        for extra in paths[1:]:
            merged = merge_lexicons(merged, load_lexicon(extra, args.lang))
    return merged


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def _read_reports(path: str) -> list[dict]:
    reports = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            record = json.loads(line)
            if record.get("schema_version") != SCHEMA_VERSION:
                raise CliError(
                    f"{path}:{lineno}: schema_version {record.get('schema_version')} "
                    f"!= expected {SCHEMA_VERSION}"
                )
            reports.append(record)
    return reports


def _features_from_report_dicts(reports: list[dict]) -> list[corpus_mod.FeatureVector]:
    vectors = []
    for record in reports:
        if record.get("excluded"):
            continue
        scored = [s for s in record["sentences"] if s.get("scored")]
        vag = [s["ratios"]["vagueness"] for s in scored]
        subj = [s["ratios"]["subjectivity"] for s in scored]
        det = [
            s["ratios"]["detail_vs_vagueness"]
            for s in scored
            if s["ratios"]["detail_vs_vagueness"] is not None
        ]
        values = corpus_mod._stats(vag) + corpus_mod._stats(subj) + corpus_mod._stats(det)
        vectors.append(
            corpus_mod.FeatureVector(record["doc_id"], record.get("label", ""), values)
        )
    return vectors


def _load_features_csv(path: str) -> list[corpus_mod.FeatureVector]:
    rows = Path(path).read_text(encoding="utf-8").splitlines()
    if not rows or rows[0] != corpus_mod.FEATURE_HEADER:
        raise CliError(f"{path}: missing or unexpected feature header")
    vectors = []
    for line in rows[1:]:
        if not line.strip():
            continue
        cells = line.split(",")
        vectors.append(
            corpus_mod.FeatureVector(cells[0], cells[1], tuple(float(c) for c in cells[2:]))
        )
    return vectors


def cmd_score(args) -> int:
    lexicon = _load_lexicons(args)
    tables = load_tables(args.lang)
    if args.text is not None:
        text = args.text
    elif args.input:
        text = Path(args.input).read_text(encoding="utf-8")
    else:
        raise CliError("score needs an input file or --text")
    annotations = ingest_annotations(args.entities) if args.entities else None
    analysis = analyze_text(text, lexicon, tables, annotations, doc_id=args.doc_id)
    _emit(args.out, _dump(build_report(analysis)))
    return 0


def cmd_corpus(args) -> int:
    lexicon = _load_lexicons(args)
    tables = load_tables(args.lang)
    documents = corpus_mod.load_corpus(args.input, args.lang)
    annotations = ingest_annotations(args.entities) if args.entities else None
    reports = corpus_mod.analyze_corpus(documents, lexicon, tables, annotations)
    lines = [
        _dump(build_report(r.analysis, label=r.document.label)).rstrip("\n")
        for r in reports
    ]
    _emit(args.out, "\n".join(lines) + ("\n" if lines else ""))
    excluded = sum(1 for r in reports if r.excluded)
    print(f"{len(reports) - excluded} processed, {excluded} excluded", file=sys.stderr)
    return 0


def cmd_compare(args) -> int:
    reports = _read_reports(args.reports)
    labels = {r.get("label") for r in reports}
    for label in (args.label_a, args.label_b):
        if label not in labels:
            raise CliError(f"label {label!r} not present in reports")
    # Rebuild per-document metric values straight from the report dicts.
    groups: dict[str, list[dict]] = {args.label_a: [], args.label_b: []}
    for record in reports:
        if record.get("excluded"):
            continue
        if record.get("label") in groups:
            groups[record["label"]].append(record)
    from vaguescope.stats import welch_t_test

    threshold = corpus_mod.FAMILY_ALPHA / corpus_mod.FAMILY_SIZE
    metrics = {}
    for metric in corpus_mod.COMPARISON_METRICS:
        a = [r["text_scores"][metric] for r in groups[args.label_a]]
        b = [r["text_scores"][metric] for r in groups[args.label_b]]
        if len(a) < 2 or len(b) < 2:
            raise CliError("each group needs at least 2 scored documents")
        result = welch_t_test(a, b)
        metrics[metric] = {
            "mean_a": result.mean_a,
            "mean_b": result.mean_b,
            "t": result.t,
            "df": result.df,
            "p": result.p,
            "significant": result.p < threshold,
        }
    payload = {
        "schema_version": 1,
        "label_a": args.label_a,
        "label_b": args.label_b,
        "n_a": len(groups[args.label_a]),
        "n_b": len(groups[args.label_b]),
        "alpha": corpus_mod.FAMILY_ALPHA,
        "family_size": corpus_mod.FAMILY_SIZE,
        "metrics": metrics,
    }
    _emit(args.out, _dump(payload))
    return 0


def cmd_features(args) -> int:
    reports = _read_reports(args.reports)
    vectors = _features_from_report_dicts(reports)
    lines = [corpus_mod.FEATURE_HEADER] + [v.csv_row() for v in vectors]
    _emit(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_train(args) -> int:
    vectors = _load_features_csv(args.features)
    config = classify.TrainConfig(
        learning_rate=args.learning_rate, epochs=args.epochs, l2=args.l2, seed=args.seed
    )
    model = classify.train(vectors, config)
    _emit(args.out, model.to_json())
    return 0


def cmd_eval(args) -> int:
    model = classify.LinearModel.from_json(Path(args.model).read_text(encoding="utf-8"))
    vectors = _load_features_csv(args.features)
    result = classify.evaluate(model, vectors)
    payload = {"accuracy": result.accuracy, "confusion": result.confusion}
    _emit(args.out, _dump(payload))
    return 0


def cmd_curve(args) -> int:
    vectors = _load_features_csv(args.features)
    config = classify.TrainConfig(
        learning_rate=args.learning_rate, epochs=args.epochs, l2=args.l2, seed=args.seed
    )
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    points = classify.learning_curve(vectors, sizes, config, repeats=args.repeats)
    lines = ["size,mean_accuracy,std_accuracy"] + [
        f"{p.size},{p.mean_accuracy:.6f},{p.std_accuracy:.6f}" for p in points
    ]
    _emit(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_export_pairs(args) -> int:
    reports = _read_reports(args.reports)
    lines = [
        _dump(
            {
                "schema_version": 1,
                "kind": "pairs_header",
                "targets": ["subjective", "factual", "detail_vague"],
            }
        ).rstrip("\n")
    ]
    for record in reports:
        for sentence in record["sentences"]:
            if not sentence.get("scored"):
                continue
            lines.append(
                _dump(
                    {
                        "id": record["doc_id"],
                        "sent_index": sentence["index"],
                        "text": sentence["text"],
                        "subjective": sentence["ratios"]["subjectivity"],
                        "factual": sentence["ratios"]["factual_vagueness"],
                        "detail_vague": sentence["ratios"]["detail_vs_vagueness"],
                    }
                ).rstrip("\n")
            )
    _emit(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_merge_lexicon(args) -> int:
    base = load_lexicon(args.base, args.lang)
    addition = load_lexicon(args.addition, args.lang)
    merged = merge_lexicons(base, addition)
    out = Path(args.out) if args.out else None
    if out is None:
        raise CliError("merge-lexicon requires --out")
    lines = [
        f"{e.term}\t{e.category.value}"
        for e in sorted(merged.entries, key=lambda e: e.term)
    ]
    _atomic_write(out, "\n".join(lines) + ("\n" if lines else ""))
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lang", default="en", help="ISO 639-1 language code")
    parser.add_argument(
        "--lexicon", action="append", help="lexicon TSV path (repeatable; default: bundled seed)"
    )
    parser.add_argument("--entities", help="entity-annotation JSONL path")
    parser.add_argument("--out", help="output path (default: stdout)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vaguescope",
        description="Score vagueness, subjectivity and detail in texts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="score a single text")
    p.add_argument("input", nargs="?", help="input text file")
    p.add_argument("--text", help="literal text instead of a file")
    p.add_argument("--doc-id", default="", help="document id used in the report")
    _add_common(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("corpus", help="score a JSONL corpus")
    p.add_argument("input", help="corpus JSONL path")
    _add_common(p)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("compare", help="Welch-test two labels of a scored corpus")
    p.add_argument("reports", help="reports JSONL from the corpus command")
    p.add_argument("--label-a", required=True)
    p.add_argument("--label-b", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("features", help="extract the 12-column feature table")
    p.add_argument("reports", help="reports JSONL from the corpus command")
    _add_common(p)
    p.set_defaults(func=cmd_features)

    p = sub.add_parser("train", help="train the logistic classifier")
    p.add_argument("features", help="feature CSV path")
    p.add_argument("--learning-rate", type=float, default=0.5)
    p.add_argument("--epochs", type=int, default=1500)
    p.add_argument("--l2", type=float, default=1e-3)
    _add_common(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("eval", help="evaluate a trained classifier")
    p.add_argument("model", help="model JSON path")
    p.add_argument("features", help="feature CSV path")
    _add_common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("curve", help="learning curve over training-set sizes")
    p.add_argument("features", help="feature CSV path")
    p.add_argument("--sizes", required=True, help="comma-separated training sizes")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--learning-rate", type=float, default=0.5)
    p.add_argument("--epochs", type=int, default=1500)
    p.add_argument("--l2", type=float, default=1e-3)
    _add_common(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("export-pairs", help="sentence-level training pairs for distillation")
    p.add_argument("reports", help="reports JSONL from the corpus command")
    _add_common(p)
    p.set_defaults(func=cmd_export_pairs)

    p = sub.add_parser("merge-lexicon", help="merge an enrichment TSV into a lexicon")
    p.add_argument("base", help="base lexicon TSV")
    p.add_argument("addition", help="addition/enrichment TSV (score column ignored)")
    _add_common(p)
    p.set_defaults(func=cmd_merge_lexicon)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, LexiconError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
