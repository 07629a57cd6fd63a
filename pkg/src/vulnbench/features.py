"""Document feature extraction: TF-IDF, latent semantic indexing, and loading
externally computed sentence embeddings."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np
import scipy.sparse as sp


class EmbeddingFormatError(ValueError):
    """Embedding exchange file violates its contract."""


@dataclass(frozen=True)
class Vocabulary:
    """Term index fitted on a corpus: term -> column, with document frequencies."""

    term_to_index: dict[str, int]
    document_frequency: np.ndarray
    corpus_size: int

    @property
    def size(self) -> int:
        return len(self.term_to_index)


@dataclass
class FeatureMatrix:
    """Row-aligned document features; rows follow the dataset order."""

    data: sp.csr_matrix | np.ndarray
    row_ids: list[str]

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def dense(self) -> np.ndarray:
        if sp.issparse(self.data):
            return np.asarray(self.data.todense())
        return self.data


@dataclass(frozen=True)
class LsiModel:
    """Rank-k truncated SVD of a TF-IDF matrix; term_topic maps term space to topic space."""

    k: int
    term_topic: np.ndarray
    singular_values: np.ndarray


def fit_tfidf(corpus: Sequence[list[str]]) -> tuple[Vocabulary, np.ndarray]:
    """Fit the vocabulary and smoothed idf weights: idf = ln((1+N)/(1+df)) + 1."""
    if len(corpus) == 0:
        raise ValueError("cannot fit TF-IDF on an empty corpus")
    terms = sorted({t for doc in corpus for t in doc})
    term_to_index = {t: i for i, t in enumerate(terms)}
    df = np.zeros(len(terms), dtype=np.int64)
    for doc in corpus:
        for t in set(doc):
            df[term_to_index[t]] += 1
    n = len(corpus)
    idf = np.log((1.0 + n) / (1.0 + df)) + 1.0
    return Vocabulary(term_to_index, df, n), idf


def transform_tfidf(doc: list[str], vocab: Vocabulary, idf: np.ndarray) -> sp.csr_matrix:
    """Weight raw term counts by idf and L2-normalize. Unknown terms are ignored;
    a document with no in-vocabulary terms stays a zero row."""
    counts: dict[int, int] = {}
    for t in doc:
        col = vocab.term_to_index.get(t)
        if col is not None:
            counts[col] = counts.get(col, 0) + 1
    if not counts:
        return sp.csr_matrix((1, vocab.size))
    cols = np.fromiter(counts.keys(), dtype=np.int64)
    values = np.fromiter(counts.values(), dtype=np.float64) * idf[cols]
    values /= math.sqrt(float(values @ values))
    row = sp.csr_matrix(
        (values, (np.zeros_like(cols), cols)), shape=(1, vocab.size)
    )
    row.sort_indices()
    return row


def transform_corpus(
    corpus: Sequence[list[str]],
    vocab: Vocabulary,
    idf: np.ndarray,
    row_ids: Sequence[str] | None = None,
) -> FeatureMatrix:
    rows = [transform_tfidf(doc, vocab, idf) for doc in corpus]
    data = sp.vstack(rows, format="csr") if rows else sp.csr_matrix((0, vocab.size))
    ids = list(row_ids) if row_ids is not None else [str(i) for i in range(len(corpus))]
    return FeatureMatrix(data=data, row_ids=ids)


def fit_lsi(tfidf: FeatureMatrix | sp.csr_matrix | np.ndarray, k: int) -> LsiModel:
    """Rank-k truncated SVD. term_topic holds the top-k right singular vectors."""
    matrix = tfidf.data if isinstance(tfidf, FeatureMatrix) else tfidf
    dense = np.asarray(matrix.todense()) if sp.issparse(matrix) else np.asarray(matrix)
    n_rows, n_cols = dense.shape
    if not 1 <= k <= min(n_rows, n_cols):
        raise ValueError(f"k={k} out of range for a {n_rows}x{n_cols} matrix")
    _, s, vt = np.linalg.svd(dense, full_matrices=False)
    return LsiModel(k=k, term_topic=vt[:k].T.copy(), singular_values=s[:k].copy())


def default_lsi_topics(n_rows: int, n_cols: int, requested: int = 100) -> int:
    """Requested topic count capped at min(rows, cols) - 1, floored at 1."""
    return max(1, min(requested, min(n_rows, n_cols) - 1))


def project_lsi(row: sp.csr_matrix | np.ndarray, model: LsiModel) -> np.ndarray:
    """Map a term-space row into topic space: row @ term_topic."""
    width = row.shape[-1]
    if width != model.term_topic.shape[0]:
        raise ValueError(
            f"row has {width} terms, model expects {model.term_topic.shape[0]}"
        )
    projected = row @ model.term_topic
    return np.asarray(projected).reshape(-1)


def project_matrix(matrix: FeatureMatrix, model: LsiModel) -> FeatureMatrix:
    if matrix.cols != model.term_topic.shape[0]:
        raise ValueError(
            f"matrix has {matrix.cols} terms, model expects {model.term_topic.shape[0]}"
        )
    dense = np.asarray((matrix.data @ model.term_topic))
    return FeatureMatrix(data=dense, row_ids=list(matrix.row_ids))


def load_embeddings(path: str | Path, expected_ids: Sequence[str]) -> FeatureMatrix:
    """Load an embedding exchange file and order rows to match expected_ids.

    File format: one JSON object per line, {"doc_id", "model", "vector"}, all
    lines sharing one model name and one vector length.
    """
    path = Path(path)
    vectors: dict[str, np.ndarray] = {}
    model_name: str | None = None
    dim: int | None = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise EmbeddingFormatError(
                    f"{path}:{lineno}: malformed JSON: {exc.msg}"
                ) from exc
            doc_id = obj.get("doc_id")
            vector = obj.get("vector")
            if doc_id is None or vector is None:
                raise EmbeddingFormatError(f"{path}:{lineno}: missing doc_id or vector")
            if doc_id in vectors:
                raise EmbeddingFormatError(f"{path}:{lineno}: duplicate doc_id {doc_id!r}")
            if model_name is None:
                model_name = obj.get("model", "")
            elif obj.get("model", "") != model_name:
                raise EmbeddingFormatError(
                    f"{path}:{lineno}: mixed models in one file "
                    f"({obj.get('model', '')!r} vs {model_name!r})"
                )
            array = np.asarray(vector, dtype=np.float64)
            if array.ndim != 1:
                raise EmbeddingFormatError(f"{path}:{lineno}: vector is not flat")
            if dim is None:
                dim = array.size
            elif array.size != dim:
                raise EmbeddingFormatError(
                    f"{path}:{lineno}: vector length {array.size} != {dim}"
                )
            if not np.all(np.isfinite(array)):
                raise EmbeddingFormatError(f"{path}:{lineno}: non-finite values")
            vectors[doc_id] = array

    missing = [doc_id for doc_id in expected_ids if doc_id not in vectors]
    if missing:
        raise EmbeddingFormatError(
            f"{path}: missing embeddings for doc_id {missing[0]!r}"
            + (f" and {len(missing) - 1} more" if len(missing) > 1 else "")
        )
    if dim is None:
        raise EmbeddingFormatError(f"{path}: empty embedding file")
    data = np.vstack([vectors[doc_id] for doc_id in expected_ids]) if expected_ids else np.empty((0, dim))
    return FeatureMatrix(data=data, row_ids=list(expected_ids))
