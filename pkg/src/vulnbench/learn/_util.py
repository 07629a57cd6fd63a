"""Shared numeric helpers for the classifiers."""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp


def as_dense(X) -> np.ndarray:
    if sp.issparse(X):
        return np.asarray(X.todense(), dtype=np.float64)
    return np.asarray(X, dtype=np.float64)


def row_norms_squared(X) -> np.ndarray:
    if sp.issparse(X):
        return np.asarray(X.multiply(X).sum(axis=1)).ravel()
    return np.einsum("ij,ij->i", X, X)


def pairwise_sq_dists(A, B) -> np.ndarray:
    """Squared Euclidean distances between rows of A and rows of B.

    Works on dense arrays and CSR matrices (also mixed)."""
    dots = A @ B.T
    if sp.issparse(dots):
        dots = np.asarray(dots.todense())
    d2 = row_norms_squared(A)[:, None] + row_norms_squared(B)[None, :] - 2.0 * dots
    return np.maximum(d2, 0.0)


def feature_dim(X) -> int:
    return X.shape[1]


def check_feature_dim(X, expected: int) -> None:
    if X.shape[1] != expected:
        raise ValueError(f"feature dimension {X.shape[1]} does not match training dimension {expected}")
