"""K-nearest-neighbor classifier with uniform votes."""

from __future__ import annotations

import numpy as np

from ._util import pairwise_sq_dists
from .base import ClassifierModel


class KnnClassifier(ClassifierModel):
    algorithm = "knn"

    def __init__(self, k: int = 5):
        super().__init__()
        if k < 1:
            raise ValueError("k must be positive")
        self.k = k

    def fit(self, X, y, seed: int = 0, validation=None) -> "KnnClassifier":
        encoded = self._start_fit(X, y)
        self._X = X
        self._y = encoded
        return self

    def predict_scores(self, X) -> np.ndarray:
        """Vote fractions over the k nearest training rows; rows sum to 1."""
        self._check_predict_input(X)
        k = min(self.k, self._y.size)
        d2 = pairwise_sq_dists(X, self._X)
        # stable argsort: ties in distance resolve to the lowest training index
        nearest = np.argsort(d2, axis=1, kind="stable")[:, :k]
        n_classes = self.class_labels.size
        votes = np.zeros((X.shape[0], n_classes))
        for row, idx in enumerate(nearest):
            votes[row] = np.bincount(self._y[idx], minlength=n_classes)
        return votes / k
