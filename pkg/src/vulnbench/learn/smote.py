"""Synthetic minority oversampling: interpolate between same-class nearest neighbors."""

from __future__ import annotations

import warnings

import numpy as np

from ._util import as_dense, pairwise_sq_dists


def smote(X, y, k_neighbors: int = 5, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Oversample every class up to the majority-class count.

    Each synthetic sample is x_i + u * (x_nn - x_i) with u uniform in [0, 1]
    and x_nn one of the k nearest same-class neighbors of x_i (Euclidean).
    Original rows are returned first, bit for bit, followed by synthetic rows
    grouped per class in sorted-class order.
    """
    if k_neighbors < 1:
        raise ValueError("k_neighbors must be positive")
    X = as_dense(X)
    y = np.asarray(y)
    if X.shape[0] != y.shape[0]:
        raise ValueError("X and y have different lengths")

    classes, counts = np.unique(y, return_counts=True)
    majority = int(counts.max())
    rng = np.random.default_rng(seed)

    synthetic_blocks = []
    synthetic_labels = []
    for cls, count in zip(classes, counts):
        deficit = majority - int(count)
        if deficit == 0:
            continue
        if count < 2:
            raise ValueError(
                f"class {cls!r} has {count} sample(s); SMOTE needs at least 2"
            )
        k_eff = min(k_neighbors, int(count) - 1)
        if k_eff < k_neighbors:
            warnings.warn(
                f"k_neighbors clamped from {k_neighbors} to {k_eff} "
                f"for class {cls!r} with {count} samples",
                stacklevel=2,
            )
        rows = X[y == cls]
        d2 = pairwise_sq_dists(rows, rows)
        np.fill_diagonal(d2, np.inf)
        neighbors = np.argsort(d2, axis=1, kind="stable")[:, :k_eff]

        source = rng.integers(0, count, size=deficit)
        picked = neighbors[source, rng.integers(0, k_eff, size=deficit)]
        u = rng.random(deficit)
        block = rows[source] + u[:, None] * (rows[picked] - rows[source])
        synthetic_blocks.append(block)
        synthetic_labels.append(np.full(deficit, cls, dtype=y.dtype))

    if not synthetic_blocks:
        return X, y
    X_out = np.vstack([X, *synthetic_blocks])
    y_out = np.concatenate([y, *synthetic_labels])
    return X_out, y_out
