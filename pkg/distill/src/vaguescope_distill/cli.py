"""Command line interface for training, evaluating, and explaining the
distilled scorer."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import attribute, data, lexicon_eval, metrics, model


def _write_json(path: str, payload) -> None:
    Path(path).write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def _select_split(records, split: str, holdout: float, seed: int):
    if split == "all":
        return records
    train, held = data.split_by_document(records, holdout=holdout, seed=seed)
    return train if split == "train" else held


def cmd_train(args) -> int:
    records = data.load_pairs(args.pairs)
    train, _ = data.split_by_document(records, holdout=args.holdout, seed=args.seed)
    config = model.ModelConfig(
        target=args.target,
        epochs=args.epochs,
        learning_rate=args.learning_rate,
        batch_size=args.batch_size,
        seed=args.seed,
    )
    regressor = model.train_regressor(train, config, log=args.verbose)
    model.save_model(regressor, args.out)
    print(f"trained on {len(train)} pairs, saved to {args.out}", file=sys.stderr)
    return 0


def cmd_evaluate(args) -> int:
    regressor = model.load_model(args.model)
    target = regressor.config.target
    records = _select_split(
        data.load_pairs(args.pairs), args.split, args.holdout, args.seed
    )
    usable = [r for r in records if r.target(target) is not None]
    if not usable:
        raise ValueError(f"no pairs with a defined {target!r} target in this split")
    preds = regressor.predict([r.tokens for r in usable])
    report = metrics.regression_metrics([r.target(target) for r in usable], preds)
    report.update({"target": target, "split": args.split, "n_pairs": len(usable)})
    _write_json(args.out, report)
    return 0


def cmd_attribute(args) -> int:
    regressor = model.load_model(args.model)
    records = _select_split(
        data.load_pairs(args.pairs), args.split, args.holdout, args.seed
    )
    if args.limit is not None:
        records = records[: args.limit]
    occurrences = attribute.attribute_pairs(
        regressor.predict, records, n_samples=args.samples, seed=args.seed
    )
    ranking = attribute.aggregate_contributions(occurrences)
    lines = ["token,occ_count,c_tok"]
    lines += [f"{c.token},{c.occurrences},{c.c_tok:.6f}" for c in ranking]
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"attributed {len(records)} sentences, {len(ranking)} tokens", file=sys.stderr)
    return 0


def _load_ranking(path: str) -> list[attribute.TokenContribution]:
    ranking = []
    with open(path, encoding="utf-8") as handle:
        header = handle.readline().strip()
        if header != "token,occ_count,c_tok":
            raise ValueError(f"{path}: unrecognized contributions header")
        for line in handle:
            # split from the right: number tokens like "1,000" contain commas
            token, occurrences, c_tok = line.rstrip("\n").rsplit(",", 2)
            ranking.append(
                attribute.TokenContribution(token, int(occurrences), float(c_tok))
            )
    if not ranking:
        raise ValueError(f"{path}: no contributions found")
    return ranking


def cmd_lexicon_eval(args) -> int:
    ranking = _load_ranking(args.contributions)
    view = lexicon_eval.load_lexicon_terms(args.lexicon, args.comparatives)
    report = lexicon_eval.build_report(
        ranking, view, threshold=args.threshold, limit=args.limit
    )
    _write_json(
        args.out,
        {
            "precision_at_k": {str(k): v for k, v in report.precision_at_k.items()},
            "auc": report.auc,
            "n_tokens": len(ranking),
            "n_members": sum(1 for c in ranking if c.token in view),
            "n_candidates": len(report.candidates),
        },
    )
    if args.roc:
        lines = ["fpr,tpr"] + [f"{fpr:.6f},{tpr:.6f}" for fpr, tpr in report.roc]
        Path(args.roc).write_text("\n".join(lines) + "\n", encoding="utf-8")
    if args.candidates:
        lexicon_eval.export_candidates(report.candidates, args.candidates)
        print(
            f"exported {len(report.candidates)} candidates to {args.candidates}",
            file=sys.stderr,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vaguescope-distill",
        description="train and explain a neural clone of the rule-based vagueness scorer",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_split_args(p):
        p.add_argument("--split", choices=("train", "holdout", "all"), default="holdout")
        p.add_argument("--holdout", type=float, default=0.2)
        p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("train", help="train a regressor on exported pairs")
    p.add_argument("pairs")
    p.add_argument("--target", choices=data.TARGETS, default="subjective")
    p.add_argument("--out", required=True, help="output model directory")
    p.add_argument("--epochs", type=int, default=30)
    p.add_argument("--learning-rate", type=float, default=1e-3)
    p.add_argument("--batch-size", type=int, default=32)
    p.add_argument("--holdout", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("evaluate", help="regression metrics on a pairs split")
    p.add_argument("model", help="model directory from the train command")
    p.add_argument("pairs")
    p.add_argument("--out", required=True)
    add_split_args(p)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("attribute", help="token contribution ranking via perturbations")
    p.add_argument("model")
    p.add_argument("pairs")
    p.add_argument("--out", required=True, help="output contributions CSV")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--limit", type=int, default=None, help="max sentences to attribute")
    add_split_args(p)
    p.set_defaults(func=cmd_attribute)

    p = sub.add_parser("lexicon-eval", help="compare a ranking against a lexicon")
    p.add_argument("contributions", help="TSV from the attribute command")
    p.add_argument("lexicon", help="reference lexicon TSV")
    p.add_argument("--comparatives", default=None, help="inflection table TSV")
    p.add_argument("--out", required=True, help="output metrics JSON")
    p.add_argument("--roc", default=None, help="optional ROC points CSV output")
    p.add_argument("--candidates", default=None, help="optional enrichment TSV output")
    p.add_argument("--threshold", type=float, default=0.0)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_lexicon_eval)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
