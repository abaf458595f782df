import random

import numpy as np
import pytest

from vaguescope.classify import (
    LinearModel,
    TrainConfig,
    evaluate,
    learning_curve,
    loss_and_gradient,
    split_holdout,
    train,
)
from vaguescope.corpus import FeatureVector


def padded(value, doc_id, label):
    values = (value,) + (0.0,) * 11
    return FeatureVector(doc_id, label, values)


TOY = [
    padded(0.1, "d1", "A"),
    padded(0.2, "d2", "A"),
    padded(0.8, "d3", "B"),
    padded(0.9, "d4", "B"),
]


def test_separable_toy_set():
    model = train(TOY)
    assert evaluate(model, TOY).accuracy == 1.0


def test_identical_features_balanced_labels():
    features = [padded(0.5, f"d{i}", "A" if i % 2 else "B") for i in range(10)]
    model = train(features)
    assert evaluate(model, features).accuracy == 0.5


def test_single_class_rejected():
    with pytest.raises(ValueError, match="2 classes"):
        train([padded(0.1, "d1", "A"), padded(0.2, "d2", "A")])


def test_empty_rejected():
    with pytest.raises(ValueError):
        train([])
    with pytest.raises(ValueError):
        evaluate(train(TOY), [])


def test_evaluate_confusion_counts():
    model = train(TOY)
    result = evaluate(model, TOY)
    assert result.confusion == {"tn": 2, "fp": 0, "fn": 0, "tp": 2}
    inverted = [padded(v.values[0], v.doc_id, "A" if v.label == "B" else "B") for v in TOY]
    assert evaluate(model, inverted).accuracy == 0.0


def test_majority_baseline_arithmetic():
    # A constant predictor on a 60/40 set scores 0.6 by definition.
    labels = ["A"] * 6 + ["B"] * 4
    predictions = ["A"] * 10
    accuracy = sum(p == l for p, l in zip(predictions, labels)) / len(labels)
    assert accuracy == 0.6


def test_loss_non_increasing():
    rng = random.Random(4)
    features = [
        padded(rng.random(), f"d{i}", "A" if i < 20 else "B") for i in range(40)
    ]
    model = train(features, TrainConfig(epochs=300))
    checked = model.losses[::10]
    for earlier, later in zip(checked, checked[1:]):
        assert later <= earlier + 1e-12


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(9)
    for _ in range(5):
        n, d = 12, 4
        x = rng.normal(size=(n, d))
        y = (rng.random(n) < 0.5).astype(float)
        w = rng.normal(size=d) * 0.5
        b = float(rng.normal() * 0.5)
        l2 = 0.01
        _, grad_w, grad_b = loss_and_gradient(w, b, x, y, l2)
        eps = 1e-6
        for j in range(d):
            bump = np.zeros(d)
            bump[j] = eps
            hi, _, _ = loss_and_gradient(w + bump, b, x, y, l2)
            lo, _, _ = loss_and_gradient(w - bump, b, x, y, l2)
            numeric = (hi - lo) / (2 * eps)
            assert grad_w[j] == pytest.approx(numeric, rel=1e-5, abs=1e-8)
        hi, _, _ = loss_and_gradient(w, b + eps, x, y, l2)
        lo, _, _ = loss_and_gradient(w, b - eps, x, y, l2)
        assert grad_b == pytest.approx((hi - lo) / (2 * eps), rel=1e-5, abs=1e-8)


def test_standardization_roundtrip():
    model = train(TOY)
    x = np.array([f.values for f in TOY], dtype=float)
    restored = model._standardize(x) * model.feature_stds + model.feature_means
    assert np.allclose(restored, x, atol=1e-12)


def test_zero_variance_feature_keeps_unit_std():
    model = train(TOY)
    assert np.all(model.feature_stds > 0)
    assert np.all(model.feature_stds[1:] == 1.0)


def test_deterministic_serialization():
    first = train(TOY, TrainConfig(seed=7)).to_json()
    second = train(TOY, TrainConfig(seed=7)).to_json()
    assert first == second
    model = LinearModel.from_json(first)
    assert model.to_json() == first


def test_learning_curve_full_pool_matches_plain_training():
    rng = random.Random(1)
    features = [
        padded(rng.random() * 0.3 + (0.5 if i % 2 else 0.0), f"d{i:03d}", "B" if i % 2 else "A")
        for i in range(50)
    ]
    config = TrainConfig(epochs=300, seed=5)
    pool, holdout = split_holdout(features, config.seed)
    points = learning_curve(features, [len(pool)], config, repeats=2)
    expected = evaluate(train(pool, config), holdout).accuracy
    assert points[0].mean_accuracy == pytest.approx(expected)
    assert points[0].std_accuracy == 0.0


def test_learning_curve_deterministic():
    rng = random.Random(2)
    features = [
        padded(rng.random() * 0.3 + (0.5 if i % 2 else 0.0), f"d{i:03d}", "B" if i % 2 else "A")
        for i in range(60)
    ]
    config = TrainConfig(epochs=200, seed=3)
    first = learning_curve(features, [10, 20], config, repeats=1)
    second = learning_curve(features, [10, 20], config, repeats=1)
    assert first == second


def test_learning_curve_size_exceeds_pool():
    with pytest.raises(ValueError, match="exceeds"):
        learning_curve(TOY, [100], TrainConfig(epochs=10))
