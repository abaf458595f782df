"""Loading and splitting exported sentence/score pairs.

The pairs file is JSONL produced by the upstream scorer's export-pairs
command: a header record with ``kind: "pairs_header"`` followed by one
record per scored sentence carrying the sentence text and its subjective,
factual, and detail-vs-vagueness targets.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .tokenizer import word_tokens

TARGETS = ("subjective", "factual", "detail_vague")


class PairsError(ValueError):
    """Raised when a pairs file is malformed."""


@dataclass(frozen=True)
class PairRecord:
    doc_id: str
    sent_index: int
    text: str
    subjective: float
    factual: float
    detail_vague: float | None

    @property
    def sentence_id(self) -> str:
        return f"{self.doc_id}:{self.sent_index}"

    @property
    def tokens(self) -> list[str]:
        return word_tokens(self.text)

    def target(self, name: str) -> float | None:
        if name not in TARGETS:
            raise ValueError(f"unknown target {name!r}")
        return getattr(self, name)


def load_pairs(path: str | Path) -> list[PairRecord]:
    """Parse a pairs JSONL file, validating the header record."""
    path = Path(path)
    records: list[PairRecord] = []
    with path.open(encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise PairsError(f"{path}:{lineno}: invalid JSON: {exc}") from None
            if lineno == 1:
                if obj.get("kind") != "pairs_header":
                    raise PairsError(f"{path}:1: missing pairs_header record")
                if obj.get("schema_version") != 1:
                    raise PairsError(
                        f"{path}:1: unsupported schema_version {obj.get('schema_version')!r}"
                    )
                continue
            try:
                records.append(
                    PairRecord(
                        doc_id=str(obj["id"]),
                        sent_index=int(obj["sent_index"]),
                        text=obj["text"],
                        subjective=float(obj["subjective"]),
                        factual=float(obj["factual"]),
                        detail_vague=(
                            None
                            if obj["detail_vague"] is None
                            else float(obj["detail_vague"])
                        ),
                    )
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise PairsError(f"{path}:{lineno}: bad pair record: {exc}") from None
    if not records:
        raise PairsError(f"{path}: no pair records found")
    return records


def split_by_document(
    records: list[PairRecord], holdout: float = 0.2, seed: int = 42
) -> tuple[list[PairRecord], list[PairRecord]]:
    """Split pairs into train/holdout sets along document boundaries.

    All sentences of a document land on the same side of the split, so the
    holdout never shares a document with the training set.
    """
    if not 0.0 < holdout < 1.0:
        raise ValueError("holdout fraction must be in (0, 1)")
    doc_ids = sorted({r.doc_id for r in records})
    rng = random.Random(seed)
    rng.shuffle(doc_ids)
    n_holdout = max(1, round(len(doc_ids) * holdout))
    held = set(doc_ids[:n_holdout])
    train = [r for r in records if r.doc_id not in held]
    test = [r for r in records if r.doc_id in held]
    if not train:
        raise ValueError("split left the training set empty")
    return train, test
