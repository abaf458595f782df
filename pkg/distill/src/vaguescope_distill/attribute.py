"""Token attribution for the distilled regressor.

For each sentence we draw random token-deletion perturbations, query the
model on every perturbed variant, and fit a weighted ridge surrogate on the
keep/drop indicator matrix.  The surrogate coefficient for a token
occurrence is its contribution c_occ; averaging c_occ over all occurrences
of the same lowercased token gives the corpus-level contribution c_tok.
"""

from __future__ import annotations

import logging
import zlib
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np
from sklearn.linear_model import Ridge

from .data import PairRecord

PredictFn = Callable[[list[list[str]]], np.ndarray]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AttributionRecord:
    """Contribution of one token occurrence in one sentence."""

    sentence_id: str
    position: int
    token: str
    c_occ: float


@dataclass(frozen=True)
class TokenContribution:
    """Corpus-level contribution of a lowercased token."""

    token: str
    occurrences: int
    c_tok: float


def _perturbation_masks(n_samples: int, n_tokens: int, rng: np.random.Generator) -> np.ndarray:
    masks = rng.integers(0, 2, size=(n_samples, n_tokens), dtype=np.int8)
    masks[0, :] = 1
    # A perturbation that drops every token carries no signal; keep one.
    empty = masks.sum(axis=1) == 0
    if empty.any():
        cols = rng.integers(0, n_tokens, size=int(empty.sum()))
        masks[np.flatnonzero(empty), cols] = 1
    return masks


def attribute_sentence(
    predict_fn: PredictFn,
    tokens: Sequence[str],
    sentence_id: str,
    n_samples: int = 500,
    seed: int = 42,
    kernel_width: float = 0.25,
    ridge_alpha: float = 1.0,
) -> list[AttributionRecord]:
    """Attribute one sentence; returns [] for sentences under two tokens."""
    tokens = list(tokens)
    if len(tokens) < 2:
        logger.info("skipping sentence %s: fewer than 2 tokens", sentence_id)
        return []
    rng = np.random.default_rng((seed, zlib.crc32(sentence_id.encode("utf-8"))))
    masks = _perturbation_masks(n_samples, len(tokens), rng)
    variants = [
        [tok for tok, keep in zip(tokens, row) if keep] for row in masks
    ]
    preds = predict_fn(variants)
    distance = 1.0 - masks.mean(axis=1)
    weights = np.exp(-(distance**2) / kernel_width**2)
    surrogate = Ridge(alpha=ridge_alpha)
    surrogate.fit(masks.astype(float), preds, sample_weight=weights)
    return [
        AttributionRecord(sentence_id, pos, tok, float(coef))
        for pos, (tok, coef) in enumerate(zip(tokens, surrogate.coef_))
    ]


def attribute_pairs(
    predict_fn: PredictFn,
    records: Iterable[PairRecord],
    n_samples: int = 500,
    seed: int = 42,
) -> list[AttributionRecord]:
    """Attribute every sentence in a pairs collection."""
    out: list[AttributionRecord] = []
    for record in records:
        out.extend(
            attribute_sentence(
                predict_fn,
                record.tokens,
                record.sentence_id,
                n_samples=n_samples,
                seed=seed,
            )
        )
    return out


def aggregate_contributions(records: Iterable[AttributionRecord]) -> list[TokenContribution]:
    """Average c_occ per lowercased token, sorted by c_tok descending.

    Ties break lexicographically on the token so the ranking is stable.
    """
    sums: dict[str, float] = {}
    counts: dict[str, int] = {}
    for record in records:
        key = record.token.lower()
        sums[key] = sums.get(key, 0.0) + record.c_occ
        counts[key] = counts.get(key, 0) + 1
    contributions = [
        TokenContribution(token, counts[token], sums[token] / counts[token])
        for token in sums
    ]
    contributions.sort(key=lambda c: (-c.c_tok, c.token))
    return contributions
