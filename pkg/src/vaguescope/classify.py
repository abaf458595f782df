"""Deterministic L2-regularized logistic regression on the 12 ratio features.

Full-batch gradient descent with feature standardization.  Training is
deterministic: inputs are sorted by document id, initialization is
zeros, and all subset sampling flows from the configured seed.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from vaguescope.corpus import FEATURE_COLUMNS, FeatureVector

MODEL_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 0.5
    epochs: int = 1500
    l2: float = 1e-3
    seed: int = 42


@dataclass
class LinearModel:
    weights: np.ndarray  # shape (12,)
    bias: float
    feature_means: np.ndarray
    feature_stds: np.ndarray
    labels: tuple[str, str]  # labels[0] -> class 0, labels[1] -> class 1
    config: TrainConfig
    losses: list[float] = field(default_factory=list)

    def _standardize(self, x: np.ndarray) -> np.ndarray:
        return (x - self.feature_means) / self.feature_stds

    def predict_proba(self, features: Sequence[FeatureVector]) -> np.ndarray:
        x = self._standardize(np.array([f.values for f in features], dtype=float))
        return _sigmoid(x @ self.weights + self.bias)

    def predict(self, features: Sequence[FeatureVector]) -> list[str]:
        probs = self.predict_proba(features)
        return [self.labels[1] if p >= 0.5 else self.labels[0] for p in probs]

    def to_json(self) -> str:
        payload = {
            "schema_version": MODEL_SCHEMA_VERSION,
            "feature_columns": list(FEATURE_COLUMNS),
            "weights": self.weights.tolist(),
            "bias": self.bias,
            "feature_means": self.feature_means.tolist(),
            "feature_stds": self.feature_stds.tolist(),
            "labels": list(self.labels),
            "config": {
                "learning_rate": self.config.learning_rate,
                "epochs": self.config.epochs,
                "l2": self.config.l2,
                "seed": self.config.seed,
            },
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "LinearModel":
        payload = json.loads(text)
        if payload.get("schema_version") != MODEL_SCHEMA_VERSION:
            raise ValueError(f"unsupported model schema: {payload.get('schema_version')}")
        cfg = payload["config"]
        return cls(
            weights=np.array(payload["weights"], dtype=float),
            bias=float(payload["bias"]),
            feature_means=np.array(payload["feature_means"], dtype=float),
            feature_stds=np.array(payload["feature_stds"], dtype=float),
            labels=tuple(payload["labels"]),
            config=TrainConfig(
                learning_rate=cfg["learning_rate"],
                epochs=cfg["epochs"],
                l2=cfg["l2"],
                seed=cfg["seed"],
            ),
        )


def _sigmoid(z: np.ndarray) -> np.ndarray:
    return 0.5 * (1.0 + np.tanh(0.5 * z))


def loss_and_gradient(
    weights: np.ndarray, bias: float, x: np.ndarray, y: np.ndarray, l2: float
) -> tuple[float, np.ndarray, float]:
    """Mean log-loss plus L2 penalty, with its analytic gradient."""
    n = len(y)
    z = x @ weights + bias
    p = _sigmoid(z)
    eps = 1e-12
    loss = -np.mean(y * np.log(p + eps) + (1 - y) * np.log(1 - p + eps))
    loss += 0.5 * l2 * float(weights @ weights)
    grad_w = x.T @ (p - y) / n + l2 * weights
    grad_b = float(np.mean(p - y))
    return float(loss), grad_w, grad_b


def train(features: Sequence[FeatureVector], config: TrainConfig = TrainConfig()) -> LinearModel:
    """Fit the logistic model; raises on empty or single-class input."""
    if not features:
        raise ValueError("empty training set")
    ordered = sorted(features, key=lambda f: f.doc_id)
    labels = tuple(sorted({f.label for f in ordered}))
    if len(labels) != 2:
        raise ValueError(f"need exactly 2 classes, got {labels}")
    x = np.array([f.values for f in ordered], dtype=float)
    y = np.array([1.0 if f.label == labels[1] else 0.0 for f in ordered])
    means = x.mean(axis=0)
    stds = x.std(axis=0)
    stds[stds == 0.0] = 1.0  # constant features stay zero after centering
    xs = (x - means) / stds
    weights = np.zeros(x.shape[1])
    bias = 0.0
    losses: list[float] = []
    for _ in range(config.epochs):
        loss, grad_w, grad_b = loss_and_gradient(weights, bias, xs, y, config.l2)
        losses.append(loss)
        weights -= config.learning_rate * grad_w
        bias -= config.learning_rate * grad_b
    return LinearModel(weights, bias, means, stds, labels, config, losses)


@dataclass(frozen=True)
class EvalResult:
    accuracy: float
    confusion: dict[str, int]  # keys: tn, fp, fn, tp (w.r.t. labels[1] as positive)


def evaluate(model: LinearModel, features: Sequence[FeatureVector]) -> EvalResult:
    if not features:
        raise ValueError("empty evaluation set")
    predictions = model.predict(features)
    tn = fp = fn = tp = 0
    correct = 0
    for feat, pred in zip(features, predictions):
        actual_pos = feat.label == model.labels[1]
        pred_pos = pred == model.labels[1]
        correct += pred == feat.label
        if actual_pos and pred_pos:
            tp += 1
        elif actual_pos:
            fn += 1
        elif pred_pos:
            fp += 1
        else:
            tn += 1
    return EvalResult(correct / len(features), {"tn": tn, "fp": fp, "fn": fn, "tp": tp})


@dataclass(frozen=True)
class CurvePoint:
    size: int
    mean_accuracy: float
    std_accuracy: float


def split_holdout(
    features: Sequence[FeatureVector], seed: int, holdout_fraction: float = 0.2
) -> tuple[list[FeatureVector], list[FeatureVector]]:
    """Deterministic train/holdout split by shuffled document id."""
    ordered = sorted(features, key=lambda f: f.doc_id)
    rng = random.Random(seed)
    rng.shuffle(ordered)
    cut = max(1, int(round(len(ordered) * holdout_fraction)))
    return ordered[cut:], ordered[:cut]


def learning_curve(
    features: Sequence[FeatureVector],
    sizes: Sequence[int],
    config: TrainConfig = TrainConfig(),
    repeats: int = 3,
    holdout_fraction: float = 0.2,
) -> list[CurvePoint]:
    """Mean held-out accuracy per training-set size over seeded repeats."""
    pool, holdout = split_holdout(features, config.seed, holdout_fraction)
    points: list[CurvePoint] = []
    for size in sizes:
        if size > len(pool):
            raise ValueError(f"size {size} exceeds training pool of {len(pool)}")
        accuracies = []
        for repeat in range(repeats):
            rng = random.Random((config.seed, size, repeat).__hash__())
            subset = rng.sample(pool, size)
            model = train(subset, config)
            accuracies.append(evaluate(model, holdout).accuracy)
        mean = sum(accuracies) / len(accuracies)
        var = sum((a - mean) ** 2 for a in accuracies) / len(accuracies)
        points.append(CurvePoint(size, mean, var**0.5))
    return points
