"""Evaluate token contributions against a reference lexicon.

The ranking produced by attribution is compared with the lexicon that
generated the training targets: precision at k measures how many of the
top-ranked tokens are known vague terms, the ROC curve sweeps the whole
ranking, and the tokens that score high without being in the lexicon
become enrichment candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .attribute import TokenContribution

DEFAULT_KS = (5, 10, 20, 30, 100, 200)


@dataclass(frozen=True)
class LexiconView:
    """Lowercased lexicon terms plus an inflected-form lookup table."""

    terms: frozenset[str]
    inflections: dict[str, str]

    def __contains__(self, token: str) -> bool:
        key = token.lower()
        if key in self.terms:
            return True
        base = self.inflections.get(key)
        return base is not None and base in self.terms


def _parse_tsv_rows(path: Path) -> Iterable[tuple[int, list[str]]]:
    with path.open(encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            yield lineno, line.split("\t")


def load_lexicon_terms(
    lexicon_path: str | Path,
    comparatives_path: str | Path | None = None,
) -> LexiconView:
    """Load lexicon terms and, optionally, an inflection table.

    Both files are plain TSV: the lexicon is term, category, and an
    optional score column; the inflection table maps an inflected form to
    its base term.
    """
    lexicon_path = Path(lexicon_path)
    terms: set[str] = set()
    for lineno, fields in _parse_tsv_rows(lexicon_path):
        if len(fields) < 2:
            raise ValueError(f"{lexicon_path}:{lineno}: expected term<TAB>category")
        terms.add(fields[0].strip().lower())
    inflections: dict[str, str] = {}
    if comparatives_path is not None:
        comparatives_path = Path(comparatives_path)
        for lineno, fields in _parse_tsv_rows(comparatives_path):
            if len(fields) < 2:
                raise ValueError(
                    f"{comparatives_path}:{lineno}: expected inflected<TAB>base"
                )
            inflections[fields[0].strip().lower()] = fields[1].strip().lower()
    return LexiconView(terms=frozenset(terms), inflections=inflections)


def precision_at_k(
    contributions: Sequence[TokenContribution],
    view: LexiconView,
    ks: Sequence[int] = DEFAULT_KS,
) -> dict[int, float]:
    """Fraction of the top k ranked tokens that are lexicon members.

    Cutoffs larger than the ranking are clipped to its length.
    """
    if not contributions:
        raise ValueError("empty contribution ranking")
    hits = [1 if c.token in view else 0 for c in contributions]
    out: dict[int, float] = {}
    for k in ks:
        kk = min(k, len(hits))
        out[k] = sum(hits[:kk]) / kk
    return out


def roc_points(
    contributions: Sequence[TokenContribution], view: LexiconView
) -> list[tuple[float, float]]:
    """ROC curve (false positive rate, true positive rate) over the ranking."""
    labels = [1 if c.token in view else 0 for c in contributions]
    positives = sum(labels)
    negatives = len(labels) - positives
    if positives == 0 or negatives == 0:
        raise ValueError("ROC needs both member and non-member tokens in the ranking")
    points = [(0.0, 0.0)]
    tp = fp = 0
    for label in labels:
        if label:
            tp += 1
        else:
            fp += 1
        points.append((fp / negatives, tp / positives))
    return points


def roc_auc(points: Sequence[tuple[float, float]]) -> float:
    """Trapezoidal area under an ROC curve given as (fpr, tpr) points."""
    area = 0.0
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        area += (x1 - x0) * (y0 + y1) / 2.0
    return area


@dataclass(frozen=True)
class EnrichmentReport:
    """Everything learned from comparing a ranking to a lexicon."""

    ranking: tuple[TokenContribution, ...]
    precision_at_k: dict[int, float]
    roc: tuple[tuple[float, float], ...]
    auc: float
    candidates: tuple[TokenContribution, ...]


def build_report(
    contributions: Sequence[TokenContribution],
    view: LexiconView,
    ks: Sequence[int] = DEFAULT_KS,
    threshold: float = 0.0,
    limit: int | None = None,
) -> EnrichmentReport:
    points = roc_points(contributions, view)
    return EnrichmentReport(
        ranking=tuple(contributions),
        precision_at_k=precision_at_k(contributions, view, ks),
        roc=tuple(points),
        auc=roc_auc(points),
        candidates=tuple(select_candidates(contributions, view, threshold, limit)),
    )


def select_candidates(
    contributions: Sequence[TokenContribution],
    view: LexiconView,
    threshold: float = 0.0,
    limit: int | None = None,
) -> list[TokenContribution]:
    """Non-member tokens with c_tok above the threshold, strongest first."""
    picked = [
        c for c in contributions if c.c_tok > threshold and c.token not in view
    ]
    return picked[:limit] if limit is not None else picked


def export_candidates(
    candidates: Sequence[TokenContribution],
    path: str | Path,
    category: str = "V_C",
) -> None:
    """Write enrichment candidates as a lexicon TSV with a score column."""
    path = Path(path)
    lines = ["# enrichment candidates: term, category, contribution score"]
    for candidate in candidates:
        lines.append(f"{candidate.token}\t{category}\t{candidate.c_tok:.6f}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
