"""Tests for the 10-shard rotation fold plan."""

import numpy as np
import pytest

from vulnbench.evaluation import K_FOLDS, make_folds


def random_labels(rng):
    n_classes = int(rng.integers(2, 5))
    counts = rng.integers(K_FOLDS, 40, size=n_classes)
    labels = np.repeat(np.arange(n_classes), counts)
    return labels[rng.permutation(labels.size)]


class TestMakeFolds:
    def test_uniform_hundred_gives_80_10_10(self):
        labels = np.zeros(100, dtype=int)
        labels[:50] = 1
        plan = make_folds(labels, seed=0)
        assert len(plan.folds) == 5
        for fold in plan.folds:
            assert fold.train.size == 80
            assert fold.validation.size == 10
            assert fold.test.size == 10

    def test_test_shards_disjoint_across_folds(self):
        labels = np.repeat([0, 1, 2], [30, 20, 10])
        plan = make_folds(labels, seed=1)
        seen = set()
        for fold in plan.folds:
            overlap = seen & set(fold.test.tolist())
            assert not overlap
            seen |= set(fold.test.tolist())

    def test_two_class_stratification(self):
        labels = np.repeat([0, 1], [60, 40])
        plan = make_folds(labels, seed=2)
        for fold in plan.folds:
            test_labels = labels[fold.test]
            assert abs(np.sum(test_labels == 0) - 6) <= 1
            assert abs(np.sum(test_labels == 1) - 4) <= 1

    def test_same_seed_identical_plans(self):
        labels = np.repeat([0, 1], [17, 23])
        plan_a = make_folds(labels, seed=99)
        plan_b = make_folds(labels, seed=99)
        for fa, fb in zip(plan_a.folds, plan_b.folds):
            assert np.array_equal(fa.train, fb.train)
            assert np.array_equal(fa.validation, fb.validation)
            assert np.array_equal(fa.test, fb.test)

    def test_class_smaller_than_k_rejected(self):
        labels = np.array(["big"] * 20 + ["tiny"] * 4)
        with pytest.raises(ValueError, match="tiny"):
            make_folds(labels, seed=0)

    def test_invariants_hold_on_random_draws(self):
        rng = np.random.default_rng(12345)
        for _ in range(100):
            labels = random_labels(rng)
            seed = int(rng.integers(0, 2**32))
            plan = make_folds(labels, seed=seed)
            n = labels.size
            all_indices = set(range(n))
            test_union = set()
            for fold in plan.folds:
                train = set(fold.train.tolist())
                val = set(fold.validation.tolist())
                test = set(fold.test.tolist())
                # the three sets partition all indices
                assert not (train & val) and not (train & test) and not (val & test)
                assert train | val | test == all_indices
                # 80/10/10 sizing within one sample per class
                n_classes = np.unique(labels).size
                assert abs(len(train) - 0.8 * n) <= n_classes
                assert abs(len(val) - 0.1 * n) <= n_classes
                assert abs(len(test) - 0.1 * n) <= n_classes
                # per-class stratification within one sample
                for cls in np.unique(labels):
                    cls_total = int(np.sum(labels == cls))
                    in_test = int(np.sum(labels[fold.test] == cls))
                    in_val = int(np.sum(labels[fold.validation] == cls))
                    assert abs(in_test - 0.1 * cls_total) <= 1
                    assert abs(in_val - 0.1 * cls_total) <= 1
                test_union &= set()
                assert not (test_union & test)
                test_union |= test
