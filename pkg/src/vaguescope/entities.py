"""Named-entity spans per sentence: built-in heuristics or ingested annotations.

The entity count per sentence feeds the detail ratios.  The heuristics
are deliberately simple and deterministic; an annotation file produced
by an external NER tool can replace them wholesale for a sentence.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from vaguescope.segmenter import Sentence

# Lowercase connectors that may join two capitalized runs ("King of Naples").
_CONNECTORS = frozenset({"of", "de", "the", "du", "la", "le"})
_YEAR_RE = re.compile(r"\d{4}")

ENTITY_KINDS = ("name", "number", "date", "other")


@dataclass(frozen=True)
class EntitySpan:
    token_start: int
    token_len: int
    kind: str = "name"

    def __post_init__(self) -> None:
        if self.token_len < 1:
            raise ValueError("entity span must cover at least one token")


class AnnotationError(ValueError):
    """Raised for malformed or duplicated entity-annotation records."""


def _capitalized(token) -> bool:
    return token.kind == "word" and token.surface[:1].isupper()


def detect_entities(
    sentence: Sentence, document_caps: Optional[frozenset[str]] = None
) -> list[EntitySpan]:
    """Heuristic entity spans: capitalized runs, numbers and year tokens.

    A sentence-initial capitalized word is ignored unless the same word
    also appears capitalized mid-sentence elsewhere in the document
    (pass those words via ``document_caps``, lowercased).
    """
    caps = document_caps or frozenset()
    tokens = sentence.tokens
    spans: list[EntitySpan] = []
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if _capitalized(token) and not _excluded_initial(i, tokens, caps):
            start = i
            i += 1
            while i < len(tokens):
                if _capitalized(tokens[i]):
                    i += 1
                elif (
                    tokens[i].surface.lower() in _CONNECTORS
                    and i + 1 < len(tokens)
                    and _capitalized(tokens[i + 1])
                ):
                    i += 2
                else:
                    break
            spans.append(EntitySpan(start, i - start, "name"))
        elif token.kind == "number":
            kind = "date" if _YEAR_RE.fullmatch(token.surface) else "number"
            spans.append(EntitySpan(i, 1, kind))
            i += 1
        else:
            i += 1
    return spans


def _excluded_initial(index: int, tokens, caps: frozenset[str]) -> bool:
    if index != 0:
        return False
    return tokens[0].surface.lower() not in caps


def document_capitalized_words(sentences: Iterable[Sentence]) -> frozenset[str]:
    """Words seen capitalized at a non-initial position anywhere in a document."""
    seen: set[str] = set()
    for sentence in sentences:
        for i, token in enumerate(sentence.tokens):
            if i > 0 and _capitalized(token):
                seen.add(token.surface.lower())
    return frozenset(seen)


def ingest_annotations(path: str | Path) -> dict[tuple[str, int], list[EntitySpan]]:
    """Parse a line-delimited JSON entity-annotation file.

    Each record is ``{"doc_id": str, "sent_index": int, "entities":
    [{"start": int, "len": int, "kind": str}]}``.  Duplicate
    (doc_id, sent_index) keys are an error.
    """
    if isinstance(path, str):
        path = Path(path)
    annotations: dict[tuple[str, int], list[EntitySpan]] = {}
    with path.open(encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            if not raw.strip():
                continue
            try:
                record = json.loads(raw)
                doc_id = record["doc_id"]
                sent_index = record["sent_index"]
                spans = [
                    EntitySpan(int(e["start"]), int(e["len"]), str(e.get("kind", "other")))
                    for e in record["entities"]
                ]
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise AnnotationError(f"{path}:{lineno}: malformed record ({exc})") from exc
            key = (str(doc_id), int(sent_index))
            if key in annotations:
                raise AnnotationError(f"{path}:{lineno}: duplicate key {key}")
            annotations[key] = spans
    return annotations
