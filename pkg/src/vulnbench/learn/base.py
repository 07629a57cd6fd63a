"""Classifier base plumbing: configuration, label encoding, shared checks."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._util import check_feature_dim

ALGORITHM_NAMES = ("knn", "gaussian_nb", "svm_rbf", "random_forest", "decision_tree", "mlp")


@dataclass(frozen=True)
class TrainConfig:
    """Which algorithm to train, its seed, and any hyperparameter overrides.

    The seed fully determines every stochastic choice made during training."""

    algorithm: str
    seed: int = 42
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHM_NAMES:
            raise ValueError(
                f"unknown algorithm {self.algorithm!r}; expected one of {ALGORITHM_NAMES}"
            )


class ClassifierModel:
    """Base for trained models: ordered class labels, predict, per-class scores."""

    algorithm = "base"

    def __init__(self) -> None:
        self.class_labels: np.ndarray | None = None
        self._n_features: int | None = None

    def _start_fit(self, X, y) -> np.ndarray:
        y = np.asarray(y)
        if X.shape[0] != y.shape[0]:
            raise ValueError("X and y have different lengths")
        self.class_labels, encoded = np.unique(y, return_inverse=True)
        if self.class_labels.size < 2:
            raise ValueError("training data must contain at least 2 classes")
        self._n_features = X.shape[1]
        return encoded

    def _check_predict_input(self, X) -> None:
        if self.class_labels is None:
            raise RuntimeError("model is not fitted")
        check_feature_dim(X, self._n_features)

    def predict_scores(self, X) -> np.ndarray:
        raise NotImplementedError

    def predict(self, X) -> np.ndarray:
        # argmax breaks exact ties toward the lowest class index
        scores = self.predict_scores(X)
        return self.class_labels[np.argmax(scores, axis=1)]
