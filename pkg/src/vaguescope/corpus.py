"""Corpus ingestion, batch scoring, group comparison and feature extraction.

Corpora are line-delimited JSON records ``{"id", "label", "text"}``.
Every document is scored with the standard pipeline; documents whose
every sentence is unscorable are flagged excluded.  Group comparison
runs Welch t-tests on three text-level metrics with a Bonferroni
correction over the family of three.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from vaguescope.entities import EntitySpan
from vaguescope.lexicon import Lexicon
from vaguescope.matcher import CancelTables, load_tables
from vaguescope.scoring import DocumentAnalysis, analyze_text
from vaguescope.stats import WelchResult, welch_t_test

COMPARISON_METRICS = ("vagueness_rate", "subjectivity_rate", "mean_detail_vs_vagueness")
FAMILY_ALPHA = 0.05
FAMILY_SIZE = len(COMPARISON_METRICS)

FEATURE_COLUMNS = (
    "vag_min", "vag_med", "vag_mean", "vag_max",
    "subj_min", "subj_med", "subj_mean", "subj_max",
    "det_min", "det_med", "det_mean", "det_max",
)
FEATURE_HEADER = "doc_id,label," + ",".join(FEATURE_COLUMNS)


class CorpusError(ValueError):
    """Raised for malformed corpus files."""


@dataclass(frozen=True)
class CorpusDocument:
    id: str
    label: str
    text: str
    language: str = "en"


@dataclass(frozen=True)
class DocumentReport:
    document: CorpusDocument
    analysis: DocumentAnalysis

    @property
    def excluded(self) -> bool:
        return self.analysis.excluded


@dataclass(frozen=True)
class MetricComparison:
    metric: str
    mean_a: float
    mean_b: float
    t: float
    df: float
    p: float
    significant: bool


@dataclass(frozen=True)
class GroupComparison:
    label_a: str
    label_b: str
    n_a: int
    n_b: int
    metrics: dict[str, MetricComparison]


@dataclass(frozen=True)
class FeatureVector:
    doc_id: str
    label: str
    values: tuple[float, ...]  # fixed FEATURE_COLUMNS order

    def csv_row(self) -> str:
        cells = [self.doc_id, self.label] + [f"{v:.6f}" for v in self.values]
        return ",".join(cells)


def load_corpus(path: str | Path, language: str = "en") -> list[CorpusDocument]:
    """Load a JSONL corpus, validating ids and required fields."""
    path = Path(path)
    docs: dict[str, CorpusDocument] = {}
    with path.open(encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            if not raw.strip():
                continue
            try:
                record = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}:{lineno}: malformed JSON ({exc})") from exc
            missing = [k for k in ("id", "label", "text") if k not in record]
            if missing:
                raise CorpusError(f"{path}:{lineno}: missing field(s) {missing}")
            doc_id = str(record["id"])
            label = str(record["label"])
            if not label:
                raise CorpusError(f"{path}:{lineno}: empty label")
            if doc_id in docs:
                raise CorpusError(f"{path}:{lineno}: duplicate id {doc_id!r}")
            docs[doc_id] = CorpusDocument(doc_id, label, str(record["text"]), language)
    return [docs[k] for k in sorted(docs)]


def analyze_corpus(
    corpus: Sequence[CorpusDocument],
    lexicon: Lexicon,
    tables: Optional[CancelTables] = None,
    annotations: Optional[dict[tuple[str, int], list[EntitySpan]]] = None,
) -> list[DocumentReport]:
    """Score every document; order follows the (id-sorted) corpus order."""
    if tables is None:
        tables = load_tables(lexicon.language)
    reports = []
    for doc in corpus:
        analysis = analyze_text(doc.text, lexicon, tables, annotations, doc_id=doc.id)
        reports.append(DocumentReport(doc, analysis))
    return reports


def _metric_value(report: DocumentReport, metric: str) -> float:
    return float(getattr(report.analysis.text_scores, metric))


def compare_groups(
    reports: Sequence[DocumentReport], label_a: str, label_b: str
) -> GroupComparison:
    """Welch t-test per metric on per-document text scores.

    Excluded documents do not enter the comparison.  Significance uses
    a Bonferroni-corrected threshold of 0.05 / 3.
    """
    group_a = [r for r in reports if r.document.label == label_a and not r.excluded]
    group_b = [r for r in reports if r.document.label == label_b and not r.excluded]
    if len(group_a) < 2 or len(group_b) < 2:
        raise ValueError(
            f"need at least 2 documents per group, got {len(group_a)} "
            f"for {label_a!r} and {len(group_b)} for {label_b!r}"
        )
    metrics: dict[str, MetricComparison] = {}
    threshold = FAMILY_ALPHA / FAMILY_SIZE
    for metric in COMPARISON_METRICS:
        result: WelchResult = welch_t_test(
            [_metric_value(r, metric) for r in group_a],
            [_metric_value(r, metric) for r in group_b],
        )
        metrics[metric] = MetricComparison(
            metric=metric,
            mean_a=result.mean_a,
            mean_b=result.mean_b,
            t=result.t,
            df=result.df,
            p=result.p,
            significant=result.p < threshold,
        )
    return GroupComparison(label_a, label_b, len(group_a), len(group_b), metrics)


def _median(values: Sequence[float]) -> float:
    ordered = sorted(values)
    n = len(ordered)
    mid = n // 2
    if n % 2 == 1:
        return ordered[mid]
    return (ordered[mid - 1] + ordered[mid]) / 2.0


def _stats(values: Sequence[float]) -> tuple[float, float, float, float]:
    if not values:
        return (0.0, 0.0, 0.0, 0.0)
    return (min(values), _median(values), sum(values) / len(values), max(values))


def extract_features(report: DocumentReport) -> FeatureVector:
    """Min/median/mean/max of each sentence ratio, 12 values per document.

    Sentences with an undefined detail-vs-vagueness ratio are dropped
    from that ratio's statistics; statistics over an empty set are 0.
    """
    if report.excluded:
        raise ValueError(f"document {report.document.id!r} is excluded (no scored sentences)")
    scores = [s for s in report.analysis.scores if s is not None]
    vag = [float(s.vagueness) for s in scores]
    subj = [float(s.subjectivity) for s in scores]
    det = [float(s.detail_vs_vagueness) for s in scores if s.detail_vs_vagueness is not None]
    values = _stats(vag) + _stats(subj) + _stats(det)
    return FeatureVector(report.document.id, report.document.label, values)


def comparison_to_dict(comparison: GroupComparison) -> dict:
    return {
        "schema_version": 1,
        "label_a": comparison.label_a,
        "label_b": comparison.label_b,
        "n_a": comparison.n_a,
        "n_b": comparison.n_b,
        "alpha": FAMILY_ALPHA,
        "family_size": FAMILY_SIZE,
        "metrics": {
            name: {
                "mean_a": m.mean_a,
                "mean_b": m.mean_b,
                "t": m.t,
                "df": m.df,
                "p": m.p,
                "significant": m.significant,
            }
            for name, m in comparison.metrics.items()
        },
    }
