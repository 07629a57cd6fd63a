"""Single-hidden-layer perceptron: ReLU, softmax cross-entropy, Adam."""

from __future__ import annotations

import math

import numpy as np

from ._util import as_dense
from .base import ClassifierModel

_PARAM_KEYS = ("W1", "b1", "W2", "b2")


def _softmax(z: np.ndarray) -> np.ndarray:
    z = z - z.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


class MlpClassifier(ClassifierModel):
    """One hidden layer of ReLU units trained with Adam.

    When a validation split is supplied, training stops once validation loss
    fails to improve by `tol` for `patience` consecutive epochs, and the
    best-validation weights are restored. Without one, it runs max_epochs.
    """

    algorithm = "mlp"

    def __init__(
        self,
        hidden_units: int = 100,
        learning_rate: float = 1e-3,
        beta1: float = 0.9,
        beta2: float = 0.999,
        epsilon: float = 1e-8,
        batch_size: int = 200,
        max_epochs: int = 200,
        tol: float = 1e-4,
        patience: int = 10,
    ):
        super().__init__()
        self.hidden_units = hidden_units
        self.learning_rate = learning_rate
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.batch_size = batch_size
        self.max_epochs = max_epochs
        self.tol = tol
        self.patience = patience

    def _init_params(self, n_features: int, n_classes: int, rng) -> dict:
        bound1 = math.sqrt(6.0 / (n_features + self.hidden_units))
        bound2 = math.sqrt(6.0 / (self.hidden_units + n_classes))
        return {
            "W1": rng.uniform(-bound1, bound1, size=(n_features, self.hidden_units)),
            "b1": rng.uniform(-bound1, bound1, size=self.hidden_units),
            "W2": rng.uniform(-bound2, bound2, size=(self.hidden_units, n_classes)),
            "b2": rng.uniform(-bound2, bound2, size=n_classes),
        }

    def _loss_and_grads(self, params: dict, X: np.ndarray, Y: np.ndarray):
        z1 = X @ params["W1"] + params["b1"]
        a1 = np.maximum(z1, 0.0)
        probs = _softmax(a1 @ params["W2"] + params["b2"])
        n = X.shape[0]
        loss = -np.sum(Y * np.log(np.maximum(probs, 1e-300))) / n

        dz2 = (probs - Y) / n
        da1 = dz2 @ params["W2"].T
        dz1 = da1 * (z1 > 0.0)
        grads = {
            "W2": a1.T @ dz2,
            "b2": dz2.sum(axis=0),
            "W1": X.T @ dz1,
            "b1": dz1.sum(axis=0),
        }
        return loss, grads

    def _loss(self, params: dict, X: np.ndarray, Y: np.ndarray) -> float:
        z1 = X @ params["W1"] + params["b1"]
        a1 = np.maximum(z1, 0.0)
        probs = _softmax(a1 @ params["W2"] + params["b2"])
        return float(-np.sum(Y * np.log(np.maximum(probs, 1e-300))) / X.shape[0])

    def fit(self, X, y, seed: int = 0, validation=None) -> "MlpClassifier":
        X = as_dense(X)
        encoded = self._start_fit(X, y)
        n, n_classes = X.shape[0], self.class_labels.size
        Y = np.eye(n_classes)[encoded]
        rng = np.random.default_rng(seed)
        params = self._init_params(X.shape[1], n_classes, rng)

        if validation is not None:
            X_val = as_dense(validation[0])
            val_labels = np.asarray(validation[1])
            val_encoded = np.searchsorted(self.class_labels, val_labels)
            val_encoded = np.clip(val_encoded, 0, n_classes - 1)
            if not np.array_equal(self.class_labels[val_encoded], val_labels):
                raise ValueError("validation labels contain classes unseen in training")
            Y_val = np.eye(n_classes)[val_encoded]
        batch = min(self.batch_size, n)
        moment1 = {k: np.zeros_like(v) for k, v in params.items()}
        moment2 = {k: np.zeros_like(v) for k, v in params.items()}
        step = 0
        best_loss = math.inf
        best_params = None
        stall = 0

        for _ in range(self.max_epochs):
            order = rng.permutation(n)
            for start in range(0, n, batch):
                rows = order[start : start + batch]
                _, grads = self._loss_and_grads(params, X[rows], Y[rows])
                step += 1
                for key in _PARAM_KEYS:
                    moment1[key] = self.beta1 * moment1[key] + (1 - self.beta1) * grads[key]
                    moment2[key] = self.beta2 * moment2[key] + (1 - self.beta2) * grads[key] ** 2
                    m_hat = moment1[key] / (1 - self.beta1**step)
                    v_hat = moment2[key] / (1 - self.beta2**step)
                    params[key] -= self.learning_rate * m_hat / (np.sqrt(v_hat) + self.epsilon)
            if validation is not None:
                val_loss = self._loss(params, X_val, Y_val)
                if val_loss < best_loss - self.tol:
                    best_loss = val_loss
                    best_params = {k: v.copy() for k, v in params.items()}
                    stall = 0
                else:
                    stall += 1
                    if stall >= self.patience:
                        break
        if validation is not None and best_params is not None:
            params = best_params
        self.params_ = params
        return self

    def predict_scores(self, X) -> np.ndarray:
        """Softmax probabilities; rows sum to 1."""
        self._check_predict_input(X)
        X = as_dense(X)
        z1 = np.maximum(X @ self.params_["W1"] + self.params_["b1"], 0.0)
        return _softmax(z1 @ self.params_["W2"] + self.params_["b2"])

    # flat-vector views used by the finite-difference gradient check
    def pack(self, params: dict) -> np.ndarray:
        return np.concatenate([params[k].ravel() for k in _PARAM_KEYS])

    def unpack(self, flat: np.ndarray, like: dict) -> dict:
        out = {}
        offset = 0
        for key in _PARAM_KEYS:
            size = like[key].size
            out[key] = flat[offset : offset + size].reshape(like[key].shape).copy()
            offset += size
        return out
