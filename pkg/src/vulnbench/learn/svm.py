"""RBF-kernel support vector machine trained with sequential minimal optimization,
one-vs-rest for multiclass."""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from ._util import as_dense, pairwise_sq_dists, row_norms_squared
from .base import ClassifierModel


def rbf_kernel(A, B, gamma: float) -> np.ndarray:
    return np.exp(-gamma * pairwise_sq_dists(A, B))


def scale_gamma(X) -> float:
    """1 / (n_features * mean per-feature variance); falls back to 1/n_features
    when the data has no variance."""
    n_features = X.shape[1]
    if sp.issparse(X):
        mean_sq = np.asarray(X.multiply(X).mean(axis=0)).ravel()
        mean = np.asarray(X.mean(axis=0)).ravel()
        variances = mean_sq - mean**2
    else:
        variances = np.var(np.asarray(X, dtype=np.float64), axis=0)
    mean_var = float(np.mean(variances))
    if mean_var <= 0.0:
        return 1.0 / n_features
    return 1.0 / (n_features * mean_var)


class _BinarySmo:
    """Platt's SMO on a precomputed kernel for labels in {-1, +1}.

    Decision values are f(x) = sum_i alpha_i y_i K(x_i, x) + b.
    """

    def __init__(self, C: float, tol: float, eps: float = 1e-8, max_iter: int = 200_000):
        self.C = C
        self.tol = tol
        self.eps = eps
        self.max_iter = max_iter

    def fit(self, K: np.ndarray, y: np.ndarray, rng: np.random.Generator) -> None:
        n = y.size
        self.K = K
        self.y = y.astype(np.float64)
        self.alpha = np.zeros(n)
        self.b = 0.0
        # error cache: E_i = f(x_i) - y_i; valid throughout because every
        # alpha/b update below refreshes it in full
        self.errors = -self.y.copy()
        self._rng = rng

        iterations = 0
        examine_all = True
        num_changed = 0
        while (num_changed > 0 or examine_all) and iterations < self.max_iter:
            num_changed = 0
            if examine_all:
                candidates = range(n)
            else:
                candidates = np.flatnonzero(
                    (self.alpha > self.eps) & (self.alpha < self.C - self.eps)
                )
            for i2 in candidates:
                num_changed += self._examine(int(i2))
                iterations += 1
            if examine_all:
                examine_all = False
            elif num_changed == 0:
                examine_all = True

    def _examine(self, i2: int) -> int:
        y2 = self.y[i2]
        alpha2 = self.alpha[i2]
        e2 = self.errors[i2]
        r2 = e2 * y2
        violates = (r2 < -self.tol and alpha2 < self.C - self.eps) or (
            r2 > self.tol and alpha2 > self.eps
        )
        if not violates:
            return 0

        non_bound = np.flatnonzero(
            (self.alpha > self.eps) & (self.alpha < self.C - self.eps)
        )
        if non_bound.size > 1:
            i1 = int(non_bound[np.argmax(np.abs(self.errors[non_bound] - e2))])
            if self._take_step(i1, i2):
                return 1
        if non_bound.size > 0:
            start = self._rng.integers(non_bound.size)
            for offset in range(non_bound.size):
                i1 = int(non_bound[(start + offset) % non_bound.size])
                if self._take_step(i1, i2):
                    return 1
        start = self._rng.integers(self.y.size)
        for offset in range(self.y.size):
            i1 = int((start + offset) % self.y.size)
            if self._take_step(i1, i2):
                return 1
        return 0

    def _take_step(self, i1: int, i2: int) -> bool:
        if i1 == i2:
            return False
        alpha1, alpha2 = self.alpha[i1], self.alpha[i2]
        y1, y2 = self.y[i1], self.y[i2]
        e1, e2 = self.errors[i1], self.errors[i2]
        s = y1 * y2

        if s > 0:
            low = max(0.0, alpha1 + alpha2 - self.C)
            high = min(self.C, alpha1 + alpha2)
        else:
            low = max(0.0, alpha2 - alpha1)
            high = min(self.C, self.C + alpha2 - alpha1)
        if low >= high:
            return False

        k11 = self.K[i1, i1]
        k12 = self.K[i1, i2]
        k22 = self.K[i2, i2]
        eta = k11 + k22 - 2.0 * k12
        if eta > 0:
            a2 = alpha2 + y2 * (e1 - e2) / eta
            a2 = min(max(a2, low), high)
        else:
            # objective at the clip boundaries (Platt's endpoint evaluation,
            # adjusted for the f = sum + b sign convention used here)
            f1 = y1 * (e1 - self.b) - alpha1 * k11 - s * alpha2 * k12
            f2 = y2 * (e2 - self.b) - s * alpha1 * k12 - alpha2 * k22
            l1 = alpha1 + s * (alpha2 - low)
            h1 = alpha1 + s * (alpha2 - high)
            obj_low = (
                l1 * f1 + low * f2 + 0.5 * l1**2 * k11 + 0.5 * low**2 * k22
                + s * low * l1 * k12
            )
            obj_high = (
                h1 * f1 + high * f2 + 0.5 * h1**2 * k11 + 0.5 * high**2 * k22
                + s * high * h1 * k12
            )
            if obj_low < obj_high - self.eps:
                a2 = low
            elif obj_low > obj_high + self.eps:
                a2 = high
            else:
                a2 = alpha2

        if abs(a2 - alpha2) < self.eps * (a2 + alpha2 + self.eps):
            return False
        a1 = alpha1 + s * (alpha2 - a2)
        if a1 < 0:
            a2 += s * a1
            a1 = 0.0
        elif a1 > self.C:
            a2 += s * (a1 - self.C)
            a1 = self.C

        b1 = (
            self.b - e1 - y1 * (a1 - alpha1) * k11 - y2 * (a2 - alpha2) * k12
        )
        b2 = (
            self.b - e2 - y1 * (a1 - alpha1) * k12 - y2 * (a2 - alpha2) * k22
        )
        if 0 < a1 < self.C:
            new_b = b1
        elif 0 < a2 < self.C:
            new_b = b2
        else:
            new_b = 0.5 * (b1 + b2)

        delta_b = new_b - self.b
        self.errors += (
            y1 * (a1 - alpha1) * self.K[i1]
            + y2 * (a2 - alpha2) * self.K[i2]
            + delta_b
        )
        self.alpha[i1] = a1
        self.alpha[i2] = a2
        self.b = new_b
        return True

    def decision_values(self, K_test: np.ndarray) -> np.ndarray:
        return K_test @ (self.alpha * self.y) + self.b

    def max_kkt_violation(self) -> float:
        """Largest violation of the KKT conditions over the training points."""
        f = self.K @ (self.alpha * self.y) + self.b
        r = self.y * f - 1.0
        violation = np.zeros_like(r)
        at_lower = self.alpha <= self.eps
        at_upper = self.alpha >= self.C - self.eps
        interior = ~(at_lower | at_upper)
        violation[at_lower] = np.maximum(0.0, -r[at_lower])
        violation[at_upper] = np.maximum(0.0, r[at_upper])
        violation[interior] = np.abs(r[interior])
        return float(violation.max(initial=0.0))


class SvmRbfClassifier(ClassifierModel):
    """One-vs-rest RBF SVM. Scores are raw decision values, not probabilities."""

    algorithm = "svm_rbf"

    def __init__(self, C: float = 1.0, gamma: float | str = "scale", tol: float = 1e-3):
        super().__init__()
        self.C = C
        self.gamma = gamma
        self.tol = tol

    def fit(self, X, y, seed: int = 0, validation=None) -> "SvmRbfClassifier":
        encoded = self._start_fit(X, y)
        self.gamma_ = scale_gamma(X) if self.gamma == "scale" else float(self.gamma)
        self._X = X
        K = rbf_kernel(X, X, self.gamma_)
        seeds = np.random.SeedSequence(seed).spawn(self.class_labels.size)
        self._machines = []
        for c, seq in enumerate(seeds):
            y_bin = np.where(encoded == c, 1.0, -1.0)
            machine = _BinarySmo(C=self.C, tol=self.tol)
            machine.fit(K, y_bin, np.random.default_rng(seq))
            self._machines.append(machine)
        return self

    def predict_scores(self, X) -> np.ndarray:
        self._check_predict_input(X)
        K_test = rbf_kernel(X, self._X, self.gamma_)
        return np.column_stack([m.decision_values(K_test) for m in self._machines])

    def max_kkt_violation(self) -> float:
        return max(m.max_kkt_violation() for m in self._machines)
