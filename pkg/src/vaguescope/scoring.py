"""Sentence and text level scores from matches and entity spans.

Per sentence, four ratios over the word count N: total vagueness,
subjectivity (degree + combinatorial matches), factual vagueness
(approximation + generality matches) and detail (entity spans / N).
A fifth ratio, detail-vs-vagueness = |P| / (|P| + |V|), is undefined
when the sentence has neither entities nor vague matches.  Ratios are
kept as exact rationals; reports serialize them with six fractional
digits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional, Sequence

from vaguescope.entities import EntitySpan, detect_entities, document_capitalized_words
from vaguescope.lexicon import Lexicon, VaguenessCategory, load_lexicon
from vaguescope.matcher import CancelTables, VagueMatch, apply_cancellation, find_vague_terms, load_tables
from vaguescope.segmenter import Sentence, split_sentences

SCHEMA_VERSION = 1


class UnscorableSentence(ValueError):
    """Raised when a sentence has no countable words (N = 0)."""


@dataclass(frozen=True)
class AnalyzedSentence:
    sentence: Sentence
    matches: tuple[VagueMatch, ...]
    entities: tuple[EntitySpan, ...]

    @property
    def counts(self) -> dict[VaguenessCategory, int]:
        counts = {c: 0 for c in VaguenessCategory}
        for match in self.matches:
            if not match.cancelled:
                counts[match.entry.category] += 1
        return counts

    @property
    def vague_count(self) -> int:
        return sum(1 for m in self.matches if not m.cancelled)

    @property
    def entity_count(self) -> int:
        return len(self.entities)


@dataclass(frozen=True)
class SentenceScores:
    vagueness: Fraction
    subjectivity: Fraction
    factual_vagueness: Fraction
    detail: Fraction
    detail_vs_vagueness: Optional[Fraction]

    @property
    def vague(self) -> bool:
        return self.vagueness > 0

    @property
    def opinion(self) -> bool:
        return self.subjectivity > 0

    @property
    def labels(self) -> tuple[str, str]:
        return ("vague" if self.vague else "precise", "opinion" if self.opinion else "fact")


@dataclass(frozen=True)
class TextScores:
    vagueness_rate: Fraction
    subjectivity_rate: Fraction
    factual_rate: Fraction
    mean_detail_vs_vagueness: Fraction
    sentence_count: int
    scored_sentence_count: int


def score_sentence(analyzed: AnalyzedSentence) -> SentenceScores:
    """Compute the per-sentence ratios from non-cancelled match counts.

    A multiword match contributes one to its category count while each
    of its tokens counts in the word total.
    """
    n = analyzed.sentence.word_count
    if n == 0:
        raise UnscorableSentence(f"sentence {analyzed.sentence.index} has no words")
    counts = analyzed.counts
    subjective = counts[VaguenessCategory.DEGREE] + counts[VaguenessCategory.COMBINATORIAL]
    factual = counts[VaguenessCategory.APPROXIMATION] + counts[VaguenessCategory.GENERALITY]
    vague_total = subjective + factual
    entities = analyzed.entity_count
    dvv: Optional[Fraction] = None
    if entities + vague_total > 0:
        dvv = Fraction(entities, entities + vague_total)
    return SentenceScores(
        vagueness=Fraction(vague_total, n),
        subjectivity=Fraction(subjective, n),
        factual_vagueness=Fraction(factual, n),
        detail=Fraction(entities, n),
        detail_vs_vagueness=dvv,
    )


def score_text(
    scores: Sequence[SentenceScores], sentence_count: Optional[int] = None
) -> TextScores:
    """Aggregate sentence scores to text level.

    Rates are the fraction of scored sentences whose respective ratio is
    strictly positive; the detail-vs-vagueness mean runs over sentences
    where the ratio is defined (0 if none are).
    """
    scored = len(scores)
    total = scored if sentence_count is None else sentence_count
    if scored == 0:
        zero = Fraction(0)
        return TextScores(zero, zero, zero, zero, total, 0)
    defined = [s.detail_vs_vagueness for s in scores if s.detail_vs_vagueness is not None]
    mean_dvv = sum(defined, Fraction(0)) / len(defined) if defined else Fraction(0)
    return TextScores(
        vagueness_rate=Fraction(sum(1 for s in scores if s.vagueness > 0), scored),
        subjectivity_rate=Fraction(sum(1 for s in scores if s.subjectivity > 0), scored),
        factual_rate=Fraction(sum(1 for s in scores if s.factual_vagueness > 0), scored),
        mean_detail_vs_vagueness=mean_dvv,
        sentence_count=total,
        scored_sentence_count=scored,
    )


@dataclass(frozen=True)
class DocumentAnalysis:
    doc_id: str
    language: str
    sentences: tuple[AnalyzedSentence, ...]
    scores: tuple[Optional[SentenceScores], ...]
    text_scores: TextScores

    @property
    def excluded(self) -> bool:
        return self.text_scores.scored_sentence_count == 0


def analyze_text(
    text: str,
    lexicon: Lexicon,
    tables: Optional[CancelTables] = None,
    annotations: Optional[dict[tuple[str, int], list[EntitySpan]]] = None,
    doc_id: str = "",
) -> DocumentAnalysis:
    """Run the full pipeline on one document.

    Annotated entity spans, when present for a sentence, fully replace
    the heuristic output.  Sentences without countable words stay in the
    analysis but are left unscored.
    """
    if tables is None:
        tables = load_tables(lexicon.language)
    sentences = split_sentences(text, lexicon.language)
    caps = document_capitalized_words(sentences)
    analyzed: list[AnalyzedSentence] = []
    scores: list[Optional[SentenceScores]] = []
    for sentence in sentences:
        matches = apply_cancellation(
            find_vague_terms(sentence, lexicon, tables), sentence, tables
        )
        key = (doc_id, sentence.index)
        if annotations is not None and key in annotations:
            entities = tuple(annotations[key])
        else:
            entities = tuple(detect_entities(sentence, caps))
        unit = AnalyzedSentence(sentence, tuple(matches), entities)
        analyzed.append(unit)
        scores.append(score_sentence(unit) if sentence.word_count > 0 else None)
    present = [s for s in scores if s is not None]
    return DocumentAnalysis(
        doc_id=doc_id,
        language=lexicon.language,
        sentences=tuple(analyzed),
        scores=tuple(scores),
        text_scores=score_text(present, sentence_count=len(sentences)),
    )


def _ratio(value: Optional[Fraction]) -> Optional[float]:
    if value is None:
        return None
    return round(float(value), 6)


def build_report(analysis: DocumentAnalysis, label: Optional[str] = None) -> dict:
    """Serializable per-document report with six-decimal ratios."""
    sentences = []
    for unit, scores in zip(analysis.sentences, analysis.scores):
        entry: dict = {
            "index": unit.sentence.index,
            "text": unit.sentence.text,
            "n_words": unit.sentence.word_count,
            "counts": {c.value: unit.counts[c] for c in VaguenessCategory},
            "entity_count": unit.entity_count,
            "matches": [
                {
                    "term": m.entry.term,
                    "category": m.entry.category.value,
                    "token_start": m.token_start,
                    "token_len": m.token_len,
                    "cancelled": m.cancelled,
                    "cancel_reason": m.cancel_reason,
                }
                for m in unit.matches
            ],
        }
        if scores is None:
            entry["scored"] = False
        else:
            entry["scored"] = True
            entry["ratios"] = {
                "vagueness": _ratio(scores.vagueness),
                "subjectivity": _ratio(scores.subjectivity),
                "factual_vagueness": _ratio(scores.factual_vagueness),
                "detail": _ratio(scores.detail),
                "detail_vs_vagueness": _ratio(scores.detail_vs_vagueness),
            }
            vague_label, opinion_label = scores.labels
            entry["labels"] = {"vagueness": vague_label, "opinion": opinion_label}
        sentences.append(entry)
    text = analysis.text_scores
    report = {
        "schema_version": SCHEMA_VERSION,
        "doc_id": analysis.doc_id,
        "language": analysis.language,
        "excluded": analysis.excluded,
        "sentences": sentences,
        "text_scores": {
            "vagueness_rate": _ratio(text.vagueness_rate),
            "subjectivity_rate": _ratio(text.subjectivity_rate),
            "factual_rate": _ratio(text.factual_rate),
            "mean_detail_vs_vagueness": _ratio(text.mean_detail_vs_vagueness),
            "sentence_count": text.sentence_count,
            "scored_sentence_count": text.scored_sentence_count,
        },
    }
    if label is not None:
        report["label"] = label
    return report


def data_path(name: str):
    return resources.files("vaguescope") / "data" / name


def default_lexicon(language: str) -> Lexicon:
    """The bundled seed lexicon for a language."""
    return load_lexicon(data_path(f"lexicon_{language}.tsv"), language)


def load_prc_fixture() -> list[tuple[int, str]]:
    """The bundled 10-sentence fact/opinion benchmark."""
    rows = []
    with data_path("prc_sentences.jsonl").open(encoding="utf-8") as handle:
        for line in handle:
            if line.strip():
                record = json.loads(line)
                rows.append((int(record["id"]), record["text"]))
    return rows


def classify_prc_benchmark(lexicon: Optional[Lexicon] = None) -> list[tuple[int, str]]:
    """Fact/opinion labels for the bundled benchmark sentences."""
    if lexicon is None:
        lexicon = default_lexicon("en")
    tables = load_tables(lexicon.language)
    labels: list[tuple[int, str]] = []
    for sent_id, text in load_prc_fixture():
        analysis = analyze_text(text, lexicon, tables, doc_id=str(sent_id))
        scores = [s for s in analysis.scores if s is not None]
        opinion = any(s.opinion for s in scores)
        labels.append((sent_id, "opinion" if opinion else "fact"))
    return labels
