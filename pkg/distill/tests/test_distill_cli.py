import json

import pytest

from vaguescope_distill import cli


@pytest.fixture(scope="module")
def cli_artifacts(tmp_path_factory, pairs_path, seed_lexicon_path, comparatives_path):
    """Run the full CLI chain once (with tiny settings) and share the outputs."""
    root = tmp_path_factory.mktemp("cli")
    model_dir = root / "model"
    metrics_path = root / "metrics.json"
    contrib_path = root / "contrib.csv"
    report_path = root / "report.json"
    roc_path = root / "roc.csv"
    cand_path = root / "candidates.tsv"

    assert cli.main(
        ["train", str(pairs_path), "--target", "subjective",
         "--out", str(model_dir), "--epochs", "2"]
    ) == 0
    assert cli.main(
        ["evaluate", str(model_dir), str(pairs_path), "--out", str(metrics_path)]
    ) == 0
    assert cli.main(
        ["attribute", str(model_dir), str(pairs_path), "--out", str(contrib_path),
         "--limit", "5", "--samples", "50"]
    ) == 0
    assert cli.main(
        ["lexicon-eval", str(contrib_path), str(seed_lexicon_path),
         "--comparatives", str(comparatives_path), "--out", str(report_path),
         "--roc", str(roc_path), "--candidates", str(cand_path)]
    ) == 0
    return {
        "model": model_dir,
        "metrics": metrics_path,
        "contrib": contrib_path,
        "report": report_path,
        "roc": roc_path,
        "candidates": cand_path,
    }


def test_train_writes_model_artifact(cli_artifacts):
    assert (cli_artifacts["model"] / "config.json").exists()
    assert (cli_artifacts["model"] / "weights.pt").exists()
    config = json.loads((cli_artifacts["model"] / "config.json").read_text())
    assert config["target"] == "subjective"
    assert config["vocab"]


def test_evaluate_reports_metrics(cli_artifacts):
    metrics = json.loads(cli_artifacts["metrics"].read_text())
    assert set(metrics) >= {"rmse", "r2", "mae", "medae", "target", "split", "n_pairs"}
    assert metrics["split"] == "holdout"
    assert metrics["rmse"] >= 0.0


def test_attribute_emits_csv_ranking(cli_artifacts):
    lines = cli_artifacts["contrib"].read_text().splitlines()
    assert lines[0] == "token,occ_count,c_tok"
    assert len(lines) > 1
    scores = [float(line.rsplit(",", 2)[2]) for line in lines[1:]]
    assert scores == sorted(scores, reverse=True)


def test_lexicon_eval_outputs(cli_artifacts):
    report = json.loads(cli_artifacts["report"].read_text())
    assert set(report["precision_at_k"]) == {"5", "10", "20", "30", "100", "200"}
    assert 0.0 <= report["auc"] <= 1.0
    roc_lines = cli_artifacts["roc"].read_text().splitlines()
    assert roc_lines[0] == "fpr,tpr"
    assert roc_lines[1] == "0.000000,0.000000"
    assert roc_lines[-1] == "1.000000,1.000000"
    cand_lines = cli_artifacts["candidates"].read_text().splitlines()
    assert cand_lines[0].startswith("#")
    for line in cand_lines[1:]:
        fields = line.split("\t")
        assert len(fields) == 3 and fields[1] == "V_C"


def test_missing_pairs_file_exits_2(tmp_path):
    assert cli.main(
        ["train", str(tmp_path / "nope.jsonl"), "--out", str(tmp_path / "m")]
    ) == 2


def test_bad_contributions_header_exits_2(tmp_path, seed_lexicon_path):
    bad = tmp_path / "contrib.csv"
    bad.write_text("wrong,header,here\n", encoding="utf-8")
    assert cli.main(
        ["lexicon-eval", str(bad), seed_lexicon_path, "--out", str(tmp_path / "r.json")]
    ) == 2
