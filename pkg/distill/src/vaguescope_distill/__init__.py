"""Train a small neural regressor that mimics rule-based vagueness scores,
attribute its predictions back to tokens, and turn the strongest tokens
into lexicon enrichment candidates."""

from .data import PairRecord, load_pairs, split_by_document
from .model import ModelConfig, ScoreRegressor, train_regressor, load_model, save_model
from .metrics import regression_metrics
from .attribute import (
    AttributionRecord,
    TokenContribution,
    attribute_sentence,
    attribute_pairs,
    aggregate_contributions,
)
from .lexicon_eval import (
    EnrichmentReport,
    LexiconView,
    build_report,
    load_lexicon_terms,
    precision_at_k,
    roc_points,
    roc_auc,
    select_candidates,
    export_candidates,
)
from .tokenizer import word_tokens

__version__ = "0.1.0"

__all__ = [
    "PairRecord",
    "load_pairs",
    "split_by_document",
    "ModelConfig",
    "ScoreRegressor",
    "train_regressor",
    "load_model",
    "save_model",
    "regression_metrics",
    "AttributionRecord",
    "TokenContribution",
    "attribute_sentence",
    "attribute_pairs",
    "aggregate_contributions",
    "EnrichmentReport",
    "LexiconView",
    "build_report",
    "load_lexicon_terms",
    "precision_at_k",
    "roc_points",
    "roc_auc",
    "select_candidates",
    "export_candidates",
    "word_tokens",
]
