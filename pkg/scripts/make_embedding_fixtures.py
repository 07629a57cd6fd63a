#!/usr/bin/env python3
"""Regenerate the checked-in fixture embedding files under tests/fixtures/embeddings/.

The fixtures carry deterministic pseudo-random vectors (no real model is run):
each vector is derived from sha256(model|doc_id), so the files are stable
regardless of generation order. They cover every doc_id in the dataset derived
from the bundled snapshot, letting the transformer-method pipeline run without
the embedding bridge.
"""

from __future__ import annotations

import hashlib
import json
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from vulnbench.corpus import build_linkage, derive_dataset, load_snapshot  # noqa: E402

FIXTURE_DIM = 32
MODELS = {
    "bert": "bert-base-uncased",
    "minilm": "paraphrase-multilingual-MiniLM-L12-v2",
    "roberta": "roberta-base",
}


def pseudo_vector(model: str, doc_id: str, dim: int) -> np.ndarray:
    digest = hashlib.sha256(f"{model}|{doc_id}".encode()).digest()
    rng = np.random.default_rng(int.from_bytes(digest[:8], "big"))
    return rng.standard_normal(dim)


def main() -> None:
    snapshot = load_snapshot(ROOT / "data" / "snapshot")
    graph = build_linkage(
        snapshot.patterns, snapshot.weaknesses, snapshot.vulnerabilities
    )
    dataset = derive_dataset(graph, snapshot.patterns)

    out_dir = ROOT / "tests" / "fixtures" / "embeddings"
    out_dir.mkdir(parents=True, exist_ok=True)
    for short_name, model_id in MODELS.items():
        path = out_dir / f"{short_name}.jsonl"
        with open(path, "w", encoding="utf-8") as fh:
            for doc in dataset:
                vector = pseudo_vector(model_id, doc.doc_id, FIXTURE_DIM)
                fh.write(
                    json.dumps(
                        {
                            "doc_id": doc.doc_id,
                            "model": model_id,
                            "vector": [round(float(v), 6) for v in vector],
                        }
                    )
                    + "\n"
                )
        print(f"wrote {path} ({len(dataset)} vectors, dim {FIXTURE_DIM})")


if __name__ == "__main__":
    main()
