"""Oversampling and the six classifiers, each with fit / predict / per-class scores."""

from __future__ import annotations

import numpy as np

from .base import ALGORITHM_NAMES, ClassifierModel, TrainConfig
from .dump import dump_model
from .knn import KnnClassifier
from .mlp import MlpClassifier
from .naive_bayes import GaussianNbClassifier
from .smote import smote
from .svm import SvmRbfClassifier, rbf_kernel, scale_gamma
from .tree import DecisionTreeClassifier, RandomForestClassifier, gini_impurity

_CLASSIFIERS = {
    "knn": KnnClassifier,
    "gaussian_nb": GaussianNbClassifier,
    "svm_rbf": SvmRbfClassifier,
    "random_forest": RandomForestClassifier,
    "decision_tree": DecisionTreeClassifier,
    "mlp": MlpClassifier,
}


def fit(X, y, config: TrainConfig, validation=None) -> ClassifierModel:
    """Train the configured classifier. Only the MLP consumes the validation split."""
    model = _CLASSIFIERS[config.algorithm](**config.params)
    model.fit(X, y, seed=config.seed, validation=validation)
    return model


def predict(model: ClassifierModel, X) -> np.ndarray:
    return model.predict(X)


def predict_scores(model: ClassifierModel, X) -> np.ndarray:
    return model.predict_scores(X)


__all__ = [
    "ALGORITHM_NAMES",
    "ClassifierModel",
    "DecisionTreeClassifier",
    "GaussianNbClassifier",
    "KnnClassifier",
    "MlpClassifier",
    "RandomForestClassifier",
    "SvmRbfClassifier",
    "TrainConfig",
    "dump_model",
    "fit",
    "gini_impurity",
    "predict",
    "predict_scores",
    "rbf_kernel",
    "scale_gamma",
    "smote",
]
