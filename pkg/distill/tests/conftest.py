"""Shared fixtures for the distillation test suite.

The expensive artifacts (the synthetic pairs file exported through the
primary CLI, the two trained regressors, and one attribution ranking) are
session scoped so every test file can reuse them.
"""

import json
import subprocess

import pytest

from vaguescope import synth
from vaguescope.scoring import data_path

from vaguescope_distill import attribute, data, model

CORPUS_DOCS = 170
CORPUS_SEED = 7
ATTRIBUTION_SENTENCES = 150


def run_primary(*args):
    """Invoke the primary scorer CLI; the secondary talks to it via files."""
    result = subprocess.run(
        ["vaguescope", *args], capture_output=True, text=True
    )
    assert result.returncode == 0, result.stderr
    return result


@pytest.fixture(scope="session")
def workdir(tmp_path_factory):
    return tmp_path_factory.mktemp("distill")


@pytest.fixture(scope="session")
def corpus_path(workdir):
    docs = synth.make_corpus(CORPUS_DOCS, seed=CORPUS_SEED)
    path = workdir / "corpus.jsonl"
    with path.open("w", encoding="utf-8") as handle:
        for doc in docs:
            handle.write(
                json.dumps({"id": doc.id, "label": doc.label, "text": doc.text}) + "\n"
            )
    return path


@pytest.fixture(scope="session")
def reports_path(workdir, corpus_path):
    path = workdir / "reports.jsonl"
    run_primary("corpus", str(corpus_path), "--out", str(path))
    return path


@pytest.fixture(scope="session")
def pairs_path(workdir, reports_path):
    path = workdir / "pairs.jsonl"
    run_primary("export-pairs", str(reports_path), "--out", str(path))
    return path


@pytest.fixture(scope="session")
def pairs(pairs_path):
    return data.load_pairs(pairs_path)


@pytest.fixture(scope="session")
def splits(pairs):
    return data.split_by_document(pairs, holdout=0.2, seed=42)


@pytest.fixture(scope="session")
def subjective_model(splits):
    train, _ = splits
    return model.train_regressor(train, model.ModelConfig(target="subjective"))


@pytest.fixture(scope="session")
def factual_model(splits):
    train, _ = splits
    return model.train_regressor(train, model.ModelConfig(target="factual"))


@pytest.fixture(scope="session")
def subjective_ranking(subjective_model, splits):
    _, held = splits
    occurrences = attribute.attribute_pairs(
        subjective_model.predict, held[:ATTRIBUTION_SENTENCES], seed=42
    )
    return attribute.aggregate_contributions(occurrences)


@pytest.fixture(scope="session")
def seed_lexicon_path():
    return str(data_path("lexicon_en.tsv"))


@pytest.fixture(scope="session")
def comparatives_path():
    return str(data_path("comparatives_en.tsv"))
