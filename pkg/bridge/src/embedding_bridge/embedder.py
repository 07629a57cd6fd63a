"""Batch sentence-embedding of dataset files into the exchange format."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

SUPPORTED_MODELS = (
    "bert-base-uncased",
    "paraphrase-multilingual-MiniLM-L12-v2",
    "roberta-base",
)

_PREPROCESSED_TEXT = re.compile(r"^[a-z ]*$")


class BridgeError(RuntimeError):
    pass


class ModelUnavailableError(BridgeError):
    def __init__(self, model: str, cause: str):
        super().__init__(f"model {model!r} is not available: {cause}")
        self.model = model


@dataclass(frozen=True)
class BridgeJob:
    """One embedding run: which dataset, which model, where to write."""

    dataset_path: Path
    model: str
    output_path: Path
    batch_size: int = 32
    model_path: Path | None = None  # local weights for the named model
    allow_raw_text: bool = False

    def __post_init__(self) -> None:
        if self.model not in SUPPORTED_MODELS:
            raise BridgeError(
                f"unsupported model {self.model!r}; expected one of {SUPPORTED_MODELS}"
            )
        if self.batch_size < 1:
            raise BridgeError("batch size must be positive")


def read_dataset_texts(path: Path) -> list[tuple[str, str]]:
    """(doc_id, text) pairs from a dataset.jsonl file, in file order."""
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise BridgeError(f"{path}:{lineno}: malformed JSON: {exc.msg}") from exc
            if "doc_id" not in obj or "text" not in obj:
                raise BridgeError(f"{path}:{lineno}: missing doc_id or text")
            pairs.append((obj["doc_id"], obj["text"]))
    return pairs


def looks_preprocessed(text: str) -> bool:
    return _PREPROCESSED_TEXT.fullmatch(text) is not None


def load_model(job: BridgeJob):
    """Resolve the sentence-transformer; plain transformer checkpoints get
    mean pooling attached by the framework."""
    from sentence_transformers import SentenceTransformer

    source = str(job.model_path) if job.model_path is not None else job.model
    try:
        return SentenceTransformer(source, device="cpu")
    except Exception as exc:  # noqa: BLE001 - report any resolution failure
        raise ModelUnavailableError(job.model, str(exc)) from exc


def embed_corpus(job: BridgeJob) -> int:
    """Embed every document and write one exchange line per input, in input order.

    Embeddings are a function of the text alone: duplicate texts are encoded
    once and share one vector. Returns the number of lines written.
    """
    pairs = read_dataset_texts(job.dataset_path)

    if not job.allow_raw_text:
        offending = next(
            (doc_id for doc_id, text in pairs if not looks_preprocessed(text)), None
        )
        if offending is not None:
            raise BridgeError(
                f"document {offending!r} does not look preprocessed "
                "(expected lowercase tokens joined by spaces, as written by "
                "`vulnbench preprocess`); pass --raw-text to embed raw descriptions"
            )

    job.output_path.parent.mkdir(parents=True, exist_ok=True)
    if not pairs:
        job.output_path.write_text("", encoding="utf-8")
        return 0

    model = load_model(job)
    unique_texts = list(dict.fromkeys(text for _, text in pairs))
    vectors = model.encode(
        unique_texts,
        batch_size=job.batch_size,
        convert_to_numpy=True,
        show_progress_bar=False,
        normalize_embeddings=False,
    )
    vectors = np.asarray(vectors, dtype=np.float64)
    if not np.all(np.isfinite(vectors)):
        raise BridgeError(f"model {job.model!r} produced non-finite embeddings")
    by_text = {text: vectors[i] for i, text in enumerate(unique_texts)}

    with open(job.output_path, "w", encoding="utf-8") as fh:
        for doc_id, text in pairs:
            fh.write(
                json.dumps(
                    {
                        "doc_id": doc_id,
                        "model": job.model,
                        "vector": [float(v) for v in by_text[text]],
                    }
                )
                + "\n"
            )
    return len(pairs)
