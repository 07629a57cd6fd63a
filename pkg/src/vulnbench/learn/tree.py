"""CART decision tree and random forest (Gini impurity, no depth limit)."""

from __future__ import annotations

import math

import numpy as np

from ._util import as_dense
from .base import ClassifierModel


def gini_impurity(counts: np.ndarray) -> float:
    total = counts.sum()
    if total == 0:
        return 0.0
    p = counts / total
    return float(1.0 - np.sum(p * p))


class _Cart:
    """Array-based CART. Grown greedily on best impurity decrease;
    split ties resolve to the lowest feature index, then the lowest threshold."""

    def __init__(self, n_classes: int):
        self.n_classes = n_classes
        self.feature: list[int] = []
        self.threshold: list[float] = []
        self.left: list[int] = []
        self.right: list[int] = []
        self.distribution: list[np.ndarray] = []
        self.impurity: list[float] = []

    def _new_node(self, counts: np.ndarray) -> int:
        node = len(self.feature)
        self.feature.append(-1)
        self.threshold.append(math.nan)
        self.left.append(-1)
        self.right.append(-1)
        self.distribution.append(counts / counts.sum())
        self.impurity.append(gini_impurity(counts))
        return node

    def _best_split(self, X, y, candidates):
        n = y.size
        counts_parent = np.bincount(y, minlength=self.n_classes)
        parent_gini = gini_impurity(counts_parent)
        onehot = np.eye(self.n_classes)[y]

        best_decrease = 0.0
        best_feature = -1
        best_threshold = math.nan
        for f in candidates:
            values = X[:, f]
            order = np.argsort(values, kind="stable")
            sorted_values = values[order]
            valid = sorted_values[:-1] < sorted_values[1:]
            if not valid.any():
                continue
            left_counts = np.cumsum(onehot[order], axis=0)[:-1]
            right_counts = counts_parent - left_counts
            n_left = np.arange(1, n)
            n_right = n - n_left
            gini_left = 1.0 - np.sum(left_counts**2, axis=1) / n_left**2
            gini_right = 1.0 - np.sum(right_counts**2, axis=1) / n_right**2
            decrease = parent_gini - (n_left * gini_left + n_right * gini_right) / n
            decrease[~valid] = -np.inf
            pos = int(np.argmax(decrease))
            # strict improvement keeps the lowest feature / threshold on ties
            if decrease[pos] > best_decrease + 1e-15:
                best_decrease = float(decrease[pos])
                best_feature = int(f)
                best_threshold = float(
                    (sorted_values[pos] + sorted_values[pos + 1]) / 2.0
                )
        return best_decrease, best_feature, best_threshold

    def build(self, X, y, rng: np.random.Generator | None, max_features: int | None):
        stack = [(np.arange(y.size), self._new_node(np.bincount(y, minlength=self.n_classes)))]
        n_features = X.shape[1]
        while stack:
            indices, node = stack.pop()
            y_node = y[indices]
            if self.impurity[node] == 0.0 or indices.size < 2:
                continue
            if max_features is not None and max_features < n_features:
                candidates = np.sort(
                    rng.choice(n_features, size=max_features, replace=False)
                )
            else:
                candidates = np.arange(n_features)
            decrease, feature, threshold = self._best_split(
                X[indices], y_node, candidates
            )
            if feature < 0:
                continue
            mask = X[indices, feature] <= threshold
            left_idx = indices[mask]
            right_idx = indices[~mask]
            self.feature[node] = feature
            self.threshold[node] = threshold
            left = self._new_node(np.bincount(y[left_idx], minlength=self.n_classes))
            right = self._new_node(np.bincount(y[right_idx], minlength=self.n_classes))
            self.left[node] = left
            self.right[node] = right
            stack.append((right_idx, right))
            stack.append((left_idx, left))

    def leaf_distributions(self, X) -> np.ndarray:
        out = np.empty((X.shape[0], self.n_classes))
        for row in range(X.shape[0]):
            node = 0
            while self.feature[node] >= 0:
                if X[row, self.feature[node]] <= self.threshold[node]:
                    node = self.left[node]
                else:
                    node = self.right[node]
            out[row] = self.distribution[node]
        return out

    def depth(self) -> int:
        depths = {0: 0}
        best = 0
        for node in range(len(self.feature)):
            d = depths[node]
            best = max(best, d)
            if self.feature[node] >= 0:
                depths[self.left[node]] = d + 1
                depths[self.right[node]] = d + 1
        return best


class DecisionTreeClassifier(ClassifierModel):
    algorithm = "decision_tree"

    def fit(self, X, y, seed: int = 0, validation=None) -> "DecisionTreeClassifier":
        X = as_dense(X)
        encoded = self._start_fit(X, y)
        self.tree_ = _Cart(self.class_labels.size)
        self.tree_.build(X, encoded, rng=None, max_features=None)
        return self

    def predict_scores(self, X) -> np.ndarray:
        """Class frequencies of the reached leaf; rows sum to 1."""
        self._check_predict_input(X)
        return self.tree_.leaf_distributions(as_dense(X))


class RandomForestClassifier(ClassifierModel):
    algorithm = "random_forest"

    def __init__(
        self,
        n_trees: int = 100,
        max_features: int | str | None = "sqrt",
        bootstrap: bool = True,
    ):
        super().__init__()
        self.n_trees = n_trees
        self.max_features = max_features
        self.bootstrap = bootstrap

    def _resolve_max_features(self, n_features: int) -> int | None:
        if self.max_features is None:
            return None
        if self.max_features == "sqrt":
            return max(1, int(math.sqrt(n_features)))
        return int(self.max_features)

    def fit(self, X, y, seed: int = 0, validation=None) -> "RandomForestClassifier":
        X = as_dense(X)
        encoded = self._start_fit(X, y)
        max_features = self._resolve_max_features(X.shape[1])
        self.trees_ = []
        for seq in np.random.SeedSequence(seed).spawn(self.n_trees):
            rng = np.random.default_rng(seq)
            if self.bootstrap:
                sample = rng.integers(0, encoded.size, size=encoded.size)
                X_tree, y_tree = X[sample], encoded[sample]
            else:
                X_tree, y_tree = X, encoded
            tree = _Cart(self.class_labels.size)
            tree.build(X_tree, y_tree, rng=rng, max_features=max_features)
            self.trees_.append(tree)
        return self

    def predict_scores(self, X) -> np.ndarray:
        """Mean of per-tree leaf class frequencies; rows sum to 1."""
        self._check_predict_input(X)
        X = as_dense(X)
        total = np.zeros((X.shape[0], self.class_labels.size))
        for tree in self.trees_:
            total += tree.leaf_distributions(X)
        return total / len(self.trees_)
