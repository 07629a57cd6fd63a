"""Gaussian naive Bayes with per-class feature means and variances."""

from __future__ import annotations

import numpy as np

from ._util import as_dense
from .base import ClassifierModel


class GaussianNbClassifier(ClassifierModel):
    algorithm = "gaussian_nb"

    def __init__(self, var_smoothing: float = 1e-9):
        super().__init__()
        self.var_smoothing = var_smoothing

    def fit(self, X, y, seed: int = 0, validation=None) -> "GaussianNbClassifier":
        X = as_dense(X)
        encoded = self._start_fit(X, y)
        n_classes = self.class_labels.size
        n, d = X.shape
        self.theta_ = np.zeros((n_classes, d))
        self.var_ = np.zeros((n_classes, d))
        self.class_prior_ = np.zeros(n_classes)
        # smoothing floor is proportional to the largest feature variance
        self.epsilon_ = self.var_smoothing * np.var(X, axis=0).max()
        for c in range(n_classes):
            rows = X[encoded == c]
            self.theta_[c] = rows.mean(axis=0)
            self.var_[c] = rows.var(axis=0) + self.epsilon_
            self.class_prior_[c] = rows.shape[0] / n
        return self

    def _joint_log_likelihood(self, X) -> np.ndarray:
        X = as_dense(X)
        jll = np.empty((X.shape[0], self.class_labels.size))
        for c in range(self.class_labels.size):
            diff = X - self.theta_[c]
            log_prob = -0.5 * np.sum(
                np.log(2.0 * np.pi * self.var_[c]) + diff**2 / self.var_[c], axis=1
            )
            jll[:, c] = np.log(self.class_prior_[c]) + log_prob
        return jll

    def predict_scores(self, X) -> np.ndarray:
        """Posterior probabilities; rows sum to 1."""
        self._check_predict_input(X)
        jll = self._joint_log_likelihood(X)
        jll -= jll.max(axis=1, keepdims=True)
        posterior = np.exp(jll)
        return posterior / posterior.sum(axis=1, keepdims=True)
