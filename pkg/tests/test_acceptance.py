"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.
Criterion 9 executes the full desk-scale grid twice (serial and parallel), so
this module takes a few minutes.
"""

import math
import time
from pathlib import Path

import numpy as np
import pytest

from vulnbench.corpus import build_linkage, derive_dataset, linkage_stats, load_snapshot
from vulnbench.evaluation import (
    aggregate,
    compute_metrics,
    make_folds,
    render_table,
    run_benchmark,
    write_results_csv,
)
from vulnbench.features import (
    fit_lsi,
    fit_tfidf,
    project_matrix,
    transform_corpus,
    transform_tfidf,
)
from vulnbench.learn import (
    MlpClassifier,
    SvmRbfClassifier,
    TrainConfig,
    fit,
    predict,
    smote,
)

from paths import EMBEDDING_FIXTURES, SNAPSHOT_DIR
from test_metrics import brute_force_metrics
from test_smote import point_to_segment_distance

PINNED_REPOSITORY_STATS = [(143, 416, 559), (149, 786, 935), (685, 294919, 295604)]
REFERENCE_TFIDF_NB_MEAN_PRECISION = 0.75


def report(criterion: int, passed: bool, detail: str) -> None:
    status = "PASS" if passed else "FAIL"
    print(f"ACCEPTANCE criterion {criterion:2d}: {status} - {detail}")


def test_criterion_01_linkage_counts():
    start = time.monotonic()
    snapshot = load_snapshot(SNAPSHOT_DIR)
    graph = build_linkage(
        snapshot.patterns, snapshot.weaknesses, snapshot.vulnerabilities
    )
    rows = linkage_stats(
        graph, snapshot.patterns, snapshot.weaknesses, snapshot.vulnerabilities
    )
    elapsed = time.monotonic() - start
    stats = [(r.linked, r.not_linked, r.total) for r in rows]
    ok = stats == PINNED_REPOSITORY_STATS and elapsed < 60.0
    report(1, ok, f"stats={stats}, ingest took {elapsed:.1f}s (< 60s)")
    assert stats == PINNED_REPOSITORY_STATS
    assert elapsed < 60.0


def test_criterion_02_tfidf_oracle():
    from test_features import naive_tfidf_matrix

    rng = np.random.default_rng(4242)
    alphabet = [f"t{i}" for i in range(15)]
    worst = 0.0
    for _ in range(50):
        corpus = [
            list(rng.choice(alphabet, size=rng.integers(1, 12)))
            for _ in range(rng.integers(1, 11))
        ]
        _, expected = naive_tfidf_matrix(corpus)
        vocab, idf = fit_tfidf(corpus)
        got = transform_corpus(corpus, vocab, idf).dense()
        worst = max(worst, float(np.max(np.abs(got - expected))))

    vocab, idf = fit_tfidf([["a", "b"], ["b", "c"]])
    row = transform_tfidf(["a", "b"], vocab, idf).toarray().ravel()
    a = row[vocab.term_to_index["a"]]
    b = row[vocab.term_to_index["b"]]
    example_ok = abs(a - 0.814802) < 1e-6 and abs(b - 0.579739) < 1e-6
    ok = worst < 1e-12 and example_ok
    report(2, ok, f"oracle max diff {worst:.2e} (< 1e-12), worked example a={a:.6f} b={b:.6f}")
    assert worst < 1e-12
    assert example_ok


def test_criterion_03_lsi():
    rng = np.random.default_rng(333)

    def cosines(m):
        unit = m / np.linalg.norm(m, axis=1, keepdims=True)
        return unit @ unit.T

    dense = rng.random((4, 6))
    k = int(np.linalg.matrix_rank(dense))
    model = fit_lsi(dense, k)
    projected = dense @ model.term_topic
    cosine_diff = float(np.max(np.abs(cosines(projected) - cosines(dense))))

    ortho_diff = 0.0
    mono_ok = True
    for _ in range(20):
        matrix = rng.random((int(rng.integers(3, 9)), int(rng.integers(3, 9))))
        max_k = min(matrix.shape)
        errors = []
        for kk in range(1, max_k + 1):
            m = fit_lsi(matrix, kk)
            gram = m.term_topic.T @ m.term_topic
            ortho_diff = max(ortho_diff, float(np.max(np.abs(gram - np.eye(kk)))))
            reconstructed = (matrix @ m.term_topic) @ m.term_topic.T
            errors.append(float(np.linalg.norm(reconstructed - matrix)))
        mono_ok &= all(x >= y - 1e-9 for x, y in zip(errors, errors[1:]))

    ok = cosine_diff < 1e-6 and ortho_diff < 1e-8 and mono_ok
    report(
        3,
        ok,
        f"cosine preservation {cosine_diff:.2e} (< 1e-6), orthonormality "
        f"{ortho_diff:.2e} (< 1e-8), reconstruction monotone: {mono_ok}",
    )
    assert cosine_diff < 1e-6
    assert ortho_diff < 1e-8
    assert mono_ok


def test_criterion_04_smote():
    rng = np.random.default_rng(44)
    X = np.vstack(
        [rng.normal(0, 1, size=(14, 5)), rng.normal(4, 1, size=(6, 5))]
    )
    y = np.array([0] * 14 + [1] * 6)
    k = 4
    X_out, y_out = smote(X, y, k_neighbors=k, seed=7)

    counts = np.unique(y_out, return_counts=True)[1]
    counts_ok = counts.tolist() == [14, 14]
    originals_ok = np.array_equal(X_out[:20], X) and np.array_equal(y_out[:20], y)

    minority = X[y == 1]
    d2 = ((minority[:, None, :] - minority[None, :, :]) ** 2).sum(axis=2)
    np.fill_diagonal(d2, np.inf)
    neighbors = np.argsort(d2, axis=1, kind="stable")[:, :k]
    on_segment = 0
    synthetic = X_out[20:]
    for point in synthetic:
        if any(
            point_to_segment_distance(point, minority[i], minority[j]) <= 1e-9
            for i in range(len(minority))
            for j in neighbors[i]
        ):
            on_segment += 1
    segment_ok = on_segment == len(synthetic)

    ok = counts_ok and originals_ok and segment_ok
    report(
        4,
        ok,
        f"counts {counts.tolist()}, originals bit-identical: {originals_ok}, "
        f"{on_segment}/{len(synthetic)} synthetic points on segments",
    )
    assert counts_ok and originals_ok and segment_ok


def test_criterion_05_classifier_sanity():
    rng = np.random.default_rng(55)
    centers = [np.zeros(10), np.full(10, 4.0), np.concatenate([np.full(5, -4.0), np.full(5, 4.0)])]
    sizes = [67, 67, 66]
    X = np.vstack([rng.normal(c, 0.6, size=(s, 10)) for c, s in zip(centers, sizes)])
    y = np.repeat([0, 1, 2], sizes)

    details = []
    all_ok = True
    for algorithm in ("knn", "gaussian_nb", "svm_rbf", "random_forest", "decision_tree", "mlp"):
        start = time.monotonic()
        model = fit(X, y, TrainConfig(algorithm, seed=5))
        accuracy = float(np.mean(predict(model, X) == y))
        elapsed = time.monotonic() - start
        ok = accuracy >= 0.95 and elapsed < 10.0
        all_ok &= ok
        details.append(f"{algorithm}={accuracy:.3f}@{elapsed:.1f}s")

    xor_X = np.array([[0.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0]])
    xor_y = np.array([0, 0, 1, 1])
    xor_model = SvmRbfClassifier().fit(xor_X, xor_y, seed=0)
    xor_ok = bool(np.array_equal(predict(xor_model, xor_X), xor_y))
    all_ok &= xor_ok

    report(5, all_ok, ", ".join(details) + f", svm_rbf XOR exact: {xor_ok}")
    assert all_ok


def test_criterion_06_mlp_gradient_check():
    rng = np.random.default_rng(66)
    X = rng.normal(size=(10, 6))
    y = rng.integers(0, 3, size=10)
    Y = np.eye(3)[y]
    model = MlpClassifier(hidden_units=8)
    params = model._init_params(6, 3, rng)
    _, grads = model._loss_and_grads(params, X, Y)
    flat = model.pack(params)
    flat_grads = model.pack(grads)

    step = 1e-5
    worst = 0.0
    for coord in rng.choice(flat.size, size=10, replace=False):
        bumped = flat.copy()
        bumped[coord] += step
        loss_plus = model._loss(model.unpack(bumped, params), X, Y)
        bumped[coord] -= 2 * step
        loss_minus = model._loss(model.unpack(bumped, params), X, Y)
        numeric = (loss_plus - loss_minus) / (2 * step)
        denom = max(abs(numeric), abs(flat_grads[coord]), 1e-12)
        worst = max(worst, abs(numeric - flat_grads[coord]) / denom)
    ok = worst < 1e-4
    report(6, ok, f"max relative gradient error {worst:.2e} (< 1e-4)")
    assert worst < 1e-4


def test_criterion_07_metrics_oracle():
    rng = np.random.default_rng(77)
    worst = 0.0
    for _ in range(50):
        n = int(rng.integers(2, 21))
        k = int(rng.integers(2, 5))
        y_true = rng.integers(0, k, size=n)
        y_pred = rng.integers(0, k, size=n)
        scores = np.round(rng.random((n, k)), 1)
        cell = compute_metrics(y_true, y_pred, scores)
        expected = brute_force_metrics(y_true, y_pred, scores)
        worst = max(
            worst,
            abs(cell.precision - expected[0]),
            abs(cell.recall - expected[1]),
            abs(cell.f1 - expected[2]),
            abs(cell.auc - expected[3]),
        )

    hand = compute_metrics(
        np.array([0, 0, 1, 1]), np.array([0, 1, 1, 1]), np.eye(2)[[0, 1, 1, 1]]
    )
    hand_ok = (
        abs(hand.precision - 5 / 6) < 1e-9
        and abs(hand.recall - 0.75) < 1e-9
        and abs(hand.f1 - 11 / 15) < 1e-9
    )
    ok = worst < 1e-12 and hand_ok
    report(7, ok, f"oracle max diff {worst:.2e} (< 1e-12), hand example: {hand_ok}")
    assert worst < 1e-12
    assert hand_ok


def test_criterion_08_fold_plan():
    rng = np.random.default_rng(88)
    ok = True
    for _ in range(100):
        n_classes = int(rng.integers(2, 5))
        counts = rng.integers(5, 40, size=n_classes)
        labels = np.repeat(np.arange(n_classes), counts)
        labels = labels[rng.permutation(labels.size)]
        seed = int(rng.integers(0, 2**32))
        plan = make_folds(labels, seed=seed)
        plan_again = make_folds(labels, seed=seed)
        n = labels.size
        test_union = set()
        for fold, fold_again in zip(plan.folds, plan_again.folds):
            train = set(fold.train.tolist())
            val = set(fold.validation.tolist())
            test = set(fold.test.tolist())
            ok &= not (train & val) and not (train & test) and not (val & test)
            ok &= train | val | test == set(range(n))
            ok &= not (test_union & test)
            test_union |= test
            ok &= abs(len(train) - 0.8 * n) <= n_classes
            ok &= abs(len(val) - 0.1 * n) <= n_classes
            ok &= abs(len(test) - 0.1 * n) <= n_classes
            for cls in range(n_classes):
                cls_total = int(np.sum(labels == cls))
                ok &= abs(int(np.sum(labels[fold.test] == cls)) - 0.1 * cls_total) <= 1
                ok &= abs(int(np.sum(labels[fold.validation] == cls)) - 0.1 * cls_total) <= 1
            ok &= np.array_equal(fold.train, fold_again.train)
            ok &= np.array_equal(fold.validation, fold_again.validation)
            ok &= np.array_equal(fold.test, fold_again.test)
    report(8, ok, "100 random draws: partition, disjoint tests, 80/10/10, stratification, determinism")
    assert ok


@pytest.fixture(scope="module")
def desk_run(snapshot_dataset, tmp_path_factory):
    """Criterion 9 workload: the full tfidf+lsi grid, serial and parallel."""
    out = tmp_path_factory.mktemp("desk")
    methods = ["tfidf", "lsi"]
    classifiers = ["knn", "gaussian_nb", "svm_rbf", "random_forest", "decision_tree", "mlp"]
    n_values = [2, 3, 4, 5, 6]

    start = time.monotonic()
    cells_serial = run_benchmark(
        snapshot_dataset, methods, classifiers, n_values, seed=42, jobs=1
    )
    serial_seconds = time.monotonic() - start

    start = time.monotonic()
    cells_parallel = run_benchmark(
        snapshot_dataset, methods, classifiers, n_values, seed=42, jobs=4
    )
    parallel_seconds = time.monotonic() - start

    serial_csv = out / "serial.csv"
    parallel_csv = out / "parallel.csv"
    write_results_csv(cells_serial, serial_csv)
    write_results_csv(cells_parallel, parallel_csv)
    return {
        "cells": cells_serial,
        "serial_seconds": serial_seconds,
        "parallel_seconds": parallel_seconds,
        "identical": serial_csv.read_bytes() == parallel_csv.read_bytes(),
    }


def test_criterion_09_desk_run(desk_run):
    cells = desk_run["cells"]
    total_seconds = desk_run["serial_seconds"] + desk_run["parallel_seconds"]
    count_ok = len(cells) == 2 * 6 * 5 * 5
    time_ok = desk_run["serial_seconds"] < 1800 and desk_run["parallel_seconds"] < 1800
    table = aggregate(cells)
    rendered = render_table(table, style="md")
    import re

    format_ok = (
        re.search(r"\b\d{1,3}-\d{1,3}\(\d{1,3}\)", rendered) is not None
        and len([l for l in rendered.splitlines() if "|" in l]) == 2 + 12
    )
    ok = count_ok and time_ok and desk_run["identical"] and format_ok
    report(
        9,
        ok,
        f"{len(cells)} cells, serial {desk_run['serial_seconds']:.0f}s / parallel "
        f"{desk_run['parallel_seconds']:.0f}s (< 1800s each), rerun across --jobs "
        f"byte-identical: {desk_run['identical']}, A-B(C) format: {format_ok}",
    )
    assert count_ok and time_ok and desk_run["identical"] and format_ok
    assert total_seconds < 3600


def test_criterion_10_indicative_precision(desk_run):
    cells = [
        c for c in desk_run["cells"]
        if c.method == "tfidf" and c.classifier == "gaussian_nb"
    ]
    mean_precision = float(np.mean([c.metrics.precision for c in cells]))
    deviation = (mean_precision - REFERENCE_TFIDF_NB_MEAN_PRECISION) * 100
    within = abs(deviation) <= 10.0
    # indicative, non-blocking: the deviation is logged either way
    report(
        10,
        True,
        f"tfidf+gaussian_nb mean precision {mean_precision * 100:.1f} vs reference 75; "
        f"deviation {deviation:+.1f} points, within +-10: {within}",
    )
    assert math.isfinite(mean_precision)


def test_criterion_11_transformer_pipeline_from_fixtures(snapshot_dataset):
    paths = {
        name: EMBEDDING_FIXTURES / f"{name}.jsonl"
        for name in ("bert", "minilm", "roberta")
    }
    for path in paths.values():
        assert Path(path).exists()
    cells = run_benchmark(
        snapshot_dataset,
        ["bert", "minilm", "roberta"],
        ["gaussian_nb"],
        [2],
        seed=42,
        embedding_paths=paths,
    )
    again = run_benchmark(
        snapshot_dataset,
        ["bert", "minilm", "roberta"],
        ["gaussian_nb"],
        [2],
        seed=42,
        embedding_paths=paths,
    )
    count_ok = len(cells) == 15
    deterministic = cells == again
    in_range = all(
        0.0 <= v <= 1.0 for c in cells for v in c.metrics.as_tuple()
    )
    ok = count_ok and deterministic and in_range
    report(
        11,
        ok,
        f"{len(cells)} cells from checked-in fixture embeddings, deterministic: "
        f"{deterministic}, metrics in range: {in_range}",
    )
    assert ok
