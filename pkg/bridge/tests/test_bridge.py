"""Bridge tests: exchange-format contract, native dimensions, determinism, CLI."""

import json

import numpy as np
import pytest

from embedding_bridge import BridgeError, BridgeJob, embed_corpus
from embedding_bridge.cli import main

NATIVE_DIMS = {
    "bert-base-uncased": 768,
    "roberta-base": 768,
    "paraphrase-multilingual-MiniLM-L12-v2": 384,
}


def read_lines(path):
    return [json.loads(line) for line in path.read_text().splitlines() if line.strip()]


def run_job(dataset_file, model_paths, model, out, **kwargs):
    job = BridgeJob(
        dataset_path=dataset_file,
        model=model,
        output_path=out,
        model_path=model_paths[model],
        **kwargs,
    )
    return embed_corpus(job)


class TestEmbedCorpus:
    @pytest.mark.parametrize("model", sorted(NATIVE_DIMS))
    def test_native_dimensions_and_line_count(self, dataset_file, model_paths, model, tmp_path):
        out = tmp_path / "emb.jsonl"
        count = run_job(dataset_file, model_paths, model, out)
        lines = read_lines(out)
        assert count == len(lines) == 4
        assert all(len(line["vector"]) == NATIVE_DIMS[model] for line in lines)
        assert all(line["model"] == model for line in lines)
        assert all(np.isfinite(line["vector"]).all() for line in lines)

    def test_output_in_input_order(self, dataset_file, model_paths, tmp_path):
        out = tmp_path / "emb.jsonl"
        run_job(dataset_file, model_paths, "bert-base-uncased", out)
        ids = [line["doc_id"] for line in read_lines(out)]
        assert ids == [
            "66:CVE-2020-0001",
            "67:CVE-2020-0002",
            "68:CVE-2020-0003",
            "69:CVE-2020-0004",
        ]

    def test_deterministic_across_runs(self, dataset_file, model_paths, tmp_path):
        out_a = tmp_path / "a.jsonl"
        out_b = tmp_path / "b.jsonl"
        run_job(dataset_file, model_paths, "paraphrase-multilingual-MiniLM-L12-v2", out_a)
        run_job(dataset_file, model_paths, "paraphrase-multilingual-MiniLM-L12-v2", out_b)
        assert out_a.read_bytes() == out_b.read_bytes()

    def test_duplicate_texts_share_vectors(self, dataset_file, model_paths, tmp_path):
        out = tmp_path / "emb.jsonl"
        run_job(dataset_file, model_paths, "bert-base-uncased", out)
        lines = {line["doc_id"]: line["vector"] for line in read_lines(out)}
        assert lines["68:CVE-2020-0003"] == lines["69:CVE-2020-0004"]
        assert lines["66:CVE-2020-0001"] != lines["67:CVE-2020-0002"]

    def test_empty_input_gives_empty_valid_file(self, model_paths, tmp_path):
        dataset = tmp_path / "empty.jsonl"
        dataset.write_text("")
        out = tmp_path / "emb.jsonl"
        count = run_job(dataset, model_paths, "bert-base-uncased", out)
        assert count == 0
        assert out.read_text() == ""

    def test_raw_text_refused_without_flag(self, model_paths, tmp_path):
        dataset = tmp_path / "raw.jsonl"
        dataset.write_text(
            json.dumps(
                {"doc_id": "a", "capec_id": 1, "text": "The Attacker, sends!", "label": "x"}
            )
            + "\n"
        )
        with pytest.raises(BridgeError, match="raw-text"):
            run_job(dataset, model_paths, "bert-base-uncased", tmp_path / "o.jsonl")

    def test_raw_text_accepted_with_flag(self, model_paths, tmp_path):
        dataset = tmp_path / "raw.jsonl"
        dataset.write_text(
            json.dumps(
                {"doc_id": "a", "capec_id": 1, "text": "The Attacker, sends!", "label": "x"}
            )
            + "\n"
        )
        out = tmp_path / "o.jsonl"
        count = run_job(
            dataset, model_paths, "bert-base-uncased", out, allow_raw_text=True
        )
        assert count == 1

    def test_unsupported_model_rejected(self, dataset_file, tmp_path):
        with pytest.raises(BridgeError, match="unsupported model"):
            BridgeJob(
                dataset_path=dataset_file,
                model="word2vec-google-news",
                output_path=tmp_path / "o.jsonl",
            )

    def test_roundtrip_into_primary_loader(self, dataset_file, model_paths, tmp_path):
        load_embeddings = pytest.importorskip("vulnbench.features").load_embeddings
        out = tmp_path / "emb.jsonl"
        run_job(dataset_file, model_paths, "paraphrase-multilingual-MiniLM-L12-v2", out)
        expected_ids = [
            "69:CVE-2020-0004",
            "66:CVE-2020-0001",
            "67:CVE-2020-0002",
            "68:CVE-2020-0003",
        ]
        matrix = load_embeddings(out, expected_ids)
        assert matrix.rows == 4
        assert matrix.cols == 384
        assert matrix.row_ids == expected_ids


class TestCli:
    def test_missing_dataset_exits_2(self, capsys):
        rc = main(["--dataset", "/does/not/exist.jsonl", "--model", "bert-base-uncased", "--out", "/tmp/x.jsonl"])
        assert rc == 2
        assert "/does/not/exist.jsonl" in capsys.readouterr().err

    def test_unavailable_model_exit_names_model(self, dataset_file, tmp_path, capsys, monkeypatch):
        # point the hub cache somewhere empty and force offline resolution
        monkeypatch.setenv("HF_HUB_OFFLINE", "1")
        monkeypatch.setenv("HF_HOME", str(tmp_path / "hfhome"))
        rc = main(
            [
                "--dataset", str(dataset_file),
                "--model", "bert-base-uncased",
                "--out", str(tmp_path / "o.jsonl"),
            ]
        )
        assert rc == 3
        assert "bert-base-uncased" in capsys.readouterr().err

    def test_full_run_via_cli(self, dataset_file, model_paths, tmp_path, capsys):
        out = tmp_path / "emb.jsonl"
        rc = main(
            [
                "--dataset", str(dataset_file),
                "--model", "roberta-base",
                "--model-path", str(model_paths["roberta-base"]),
                "--out", str(out),
                "--batch-size", "2",
            ]
        )
        assert rc == 0
        assert "4 embeddings" in capsys.readouterr().out
        assert len(out.read_text().splitlines()) == 4
