"""Benchmark harness: scenario construction, the 10-shard fold plan, metric
computation, grid execution, and report emission."""

from __future__ import annotations

import csv
import hashlib
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np
from scipy.stats import rankdata

from . import learn
from .corpus import LabeledDocument
from .features import (
    FeatureMatrix,
    default_lsi_topics,
    fit_lsi,
    fit_tfidf,
    load_embeddings,
    project_matrix,
    transform_corpus,
)
from .learn import TrainConfig, smote
from .textprep import preprocess

METHOD_NAMES = ("tfidf", "lsi", "bert", "minilm", "roberta")
TRANSFORMER_METHODS = ("bert", "minilm", "roberta")
K_FOLDS = 5

DISPLAY_NAMES = {
    "knn": "KNN",
    "gaussian_nb": "NB",
    "svm_rbf": "SVM",
    "random_forest": "RF",
    "decision_tree": "DT",
    "mlp": "NN",
}

METRIC_NAMES = ("precision", "recall", "f1", "auc")


def derive_seed(master: int, *parts) -> int:
    """Stable 64-bit seed from the master seed and any identifying parts."""
    key = ":".join([str(master), *map(str, parts)])
    return int.from_bytes(hashlib.sha256(key.encode()).digest()[:8], "big")


@dataclass(frozen=True)
class ScenarioSpec:
    method: str
    classifier: str
    n: int
    seed: int

    def __post_init__(self) -> None:
        if self.method not in METHOD_NAMES:
            raise ValueError(f"unknown method {self.method!r}")
        if self.classifier not in learn.ALGORITHM_NAMES:
            raise ValueError(f"unknown classifier {self.classifier!r}")
        if self.n < 2:
            raise ValueError("n must be at least 2")


@dataclass(frozen=True)
class Fold:
    train: np.ndarray
    validation: np.ndarray
    test: np.ndarray


@dataclass(frozen=True)
class FoldPlan:
    k: int
    folds: tuple[Fold, ...]


@dataclass(frozen=True)
class MetricsCell:
    precision: float
    recall: float
    f1: float
    auc: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.precision, self.recall, self.f1, self.auc)


@dataclass(frozen=True)
class CellResult:
    method: str
    classifier: str
    n: int
    fold: int
    metrics: MetricsCell


def rank_labels_by_frequency(dataset: Sequence[LabeledDocument]) -> list[str]:
    """Labels by descending instance count; ties break lexicographically."""
    if not dataset:
        raise ValueError("dataset is empty")
    counts: dict[str, int] = {}
    for doc in dataset:
        counts[doc.label] = counts.get(doc.label, 0) + 1
    return sorted(counts, key=lambda label: (-counts[label], label))


def select_top_n(dataset: Sequence[LabeledDocument], n: int) -> list[LabeledDocument]:
    """Instances of the n most frequent labels, original order preserved."""
    ranking = rank_labels_by_frequency(dataset)
    if n > len(ranking):
        raise ValueError(f"requested top {n} labels but only {len(ranking)} exist")
    keep = set(ranking[:n])
    return [doc for doc in dataset if doc.label in keep]


def make_folds(labels: Sequence, seed: int, k: int = K_FOLDS) -> FoldPlan:
    """Shuffle per class into 2k shards; fold i tests on shard i and validates
    on shard i+k, training on the remaining 2k-2 shards (80/10/10 for k=5)."""
    labels = np.asarray(labels)
    rng = np.random.default_rng(seed)
    shards_per_class = []
    for cls in np.unique(labels):
        indices = np.flatnonzero(labels == cls)
        if indices.size < k:
            raise ValueError(
                f"class {cls!r} has {indices.size} samples, fewer than K={k}"
            )
        permuted = rng.permutation(indices)
        shards_per_class.append(np.array_split(permuted, 2 * k))

    folds = []
    all_shards = list(range(2 * k))
    for i in range(k):
        test = np.sort(np.concatenate([s[i] for s in shards_per_class]))
        validation = np.sort(np.concatenate([s[i + k] for s in shards_per_class]))
        train_ids = [j for j in all_shards if j not in (i, i + k)]
        train = np.sort(
            np.concatenate([s[j] for s in shards_per_class for j in train_ids])
        )
        folds.append(Fold(train=train, validation=validation, test=test))
    return FoldPlan(k=k, folds=tuple(folds))


def compute_metrics(y_true, y_pred, scores) -> MetricsCell:
    """Macro-averaged precision/recall/F1 and macro one-vs-rest ROC AUC.

    y_true and y_pred are class indices into the columns of scores.
    0/0 conventions give 0; AUC uses average ranks for tied scores and skips
    classes without both positives and negatives in y_true.
    """
    y_true = np.asarray(y_true)
    y_pred = np.asarray(y_pred)
    scores = np.asarray(scores, dtype=np.float64)
    if y_true.shape[0] != y_pred.shape[0] or y_true.shape[0] != scores.shape[0]:
        raise ValueError("y_true, y_pred and scores have different lengths")
    n_classes = scores.shape[1]

    precisions = np.zeros(n_classes)
    recalls = np.zeros(n_classes)
    f1s = np.zeros(n_classes)
    aucs = []
    for c in range(n_classes):
        tp = np.sum((y_pred == c) & (y_true == c))
        fp = np.sum((y_pred == c) & (y_true != c))
        fn = np.sum((y_pred != c) & (y_true == c))
        precisions[c] = tp / (tp + fp) if tp + fp else 0.0
        recalls[c] = tp / (tp + fn) if tp + fn else 0.0
        if precisions[c] + recalls[c] > 0:
            f1s[c] = 2 * precisions[c] * recalls[c] / (precisions[c] + recalls[c])

        positives = y_true == c
        n_pos = int(positives.sum())
        n_neg = y_true.size - n_pos
        if n_pos == 0 or n_neg == 0:
            continue
        ranks = rankdata(scores[:, c])
        auc = (ranks[positives].sum() - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)
        aucs.append(auc)

    return MetricsCell(
        precision=float(precisions.mean()),
        recall=float(recalls.mean()),
        f1=float(f1s.mean()),
        auc=float(np.mean(aucs)) if aucs else 0.0,
    )


@dataclass
class FoldFeatures:
    """Per-fold feature matrices plus whatever was fitted on the training split."""

    train: FeatureMatrix
    validation: FeatureMatrix
    test: FeatureMatrix
    fitted: dict


def featurize_fold(
    method: str,
    tokens: Sequence[list[str]],
    doc_ids: Sequence[str],
    fold: Fold,
    embeddings: FeatureMatrix | None = None,
    lsi_topics: int = 100,
) -> FoldFeatures:
    """Fit the featurizer on the training split only and transform all splits.

    Embedding methods are fit-free: rows are simply selected per split."""

    def ids(indices):
        return [doc_ids[i] for i in indices]

    if method in ("tfidf", "lsi"):
        train_tokens = [tokens[i] for i in fold.train]
        vocab, idf = fit_tfidf(train_tokens)
        split_matrices = {
            name: transform_corpus(
                [tokens[i] for i in indices], vocab, idf, row_ids=ids(indices)
            )
            for name, indices in (
                ("train", fold.train),
                ("validation", fold.validation),
                ("test", fold.test),
            )
        }
        fitted = {"vocabulary": vocab, "idf": idf}
        if method == "lsi":
            k = default_lsi_topics(
                split_matrices["train"].rows, split_matrices["train"].cols, lsi_topics
            )
            model = fit_lsi(split_matrices["train"], k)
            split_matrices = {
                name: project_matrix(m, model) for name, m in split_matrices.items()
            }
            fitted["lsi"] = model
        return FoldFeatures(
            train=split_matrices["train"],
            validation=split_matrices["validation"],
            test=split_matrices["test"],
            fitted=fitted,
        )

    if method in TRANSFORMER_METHODS:
        if embeddings is None:
            raise ValueError(f"method {method!r} requires an embedding matrix")
        dense = embeddings.dense()
        id_to_row = {doc_id: i for i, doc_id in enumerate(embeddings.row_ids)}

        def take(indices):
            rows = [id_to_row[doc_ids[i]] for i in indices]
            return FeatureMatrix(data=dense[rows], row_ids=ids(indices))

        return FoldFeatures(
            train=take(fold.train),
            validation=take(fold.validation),
            test=take(fold.test),
            fitted={},
        )

    raise ValueError(f"unknown method {method!r}")


def _encode_labels(class_labels: np.ndarray, labels: np.ndarray) -> np.ndarray:
    encoded = np.searchsorted(class_labels, labels)
    encoded = np.clip(encoded, 0, class_labels.size - 1)
    if not np.array_equal(class_labels[encoded], labels):
        raise ValueError("labels outside the trained class set")
    return encoded


def run_fold_cell(
    method: str,
    classifier: str,
    n: int,
    fold_index: int,
    fold: Fold,
    tokens: Sequence[list[str]],
    doc_ids: Sequence[str],
    labels: np.ndarray,
    master_seed: int,
    embeddings: FeatureMatrix | None = None,
) -> MetricsCell:
    """Featurize, oversample the training split, train, and score one cell."""
    features = featurize_fold(method, tokens, doc_ids, fold, embeddings=embeddings)
    y_train = labels[fold.train]
    y_val = labels[fold.validation]
    y_test = labels[fold.test]

    smote_seed = derive_seed(master_seed, method, classifier, n, fold_index, "smote")
    X_train, y_train = smote(features.train.data, y_train, seed=smote_seed)

    model_seed = derive_seed(master_seed, method, classifier, n, fold_index, "model")
    config = TrainConfig(classifier, seed=model_seed)
    validation = (
        (features.validation.data, y_val) if y_val.size else None
    )
    model = learn.fit(X_train, y_train, config, validation=validation)

    scores = model.predict_scores(features.test.data)
    y_pred = model.predict(features.test.data)
    cell = compute_metrics(
        _encode_labels(model.class_labels, y_test),
        _encode_labels(model.class_labels, y_pred),
        scores,
    )
    return cell


@dataclass
class _UnitPayload:
    method: str
    n: int
    fold_index: int
    fold: Fold
    classifiers: tuple[str, ...]
    tokens: list[list[str]]
    doc_ids: list[str]
    labels: np.ndarray
    master_seed: int
    embeddings: FeatureMatrix | None


class CellExecutionError(RuntimeError):
    """A grid cell failed; the message names the cell."""


def _run_unit(payload: _UnitPayload) -> list[CellResult]:
    results = []
    for classifier in payload.classifiers:
        try:
            metrics = run_fold_cell(
                payload.method,
                classifier,
                payload.n,
                payload.fold_index,
                payload.fold,
                payload.tokens,
                payload.doc_ids,
                payload.labels,
                payload.master_seed,
                embeddings=payload.embeddings,
            )
        except Exception as exc:
            raise CellExecutionError(
                f"cell (method={payload.method}, classifier={classifier}, "
                f"n={payload.n}, fold={payload.fold_index}) failed: {exc}"
            ) from exc
        results.append(
            CellResult(
                method=payload.method,
                classifier=classifier,
                n=payload.n,
                fold=payload.fold_index,
                metrics=metrics,
            )
        )
    return results


def run_benchmark(
    dataset: Sequence[LabeledDocument],
    methods: Sequence[str],
    classifiers: Sequence[str],
    n_values: Sequence[int],
    seed: int,
    embedding_paths: dict[str, str | Path] | None = None,
    jobs: int = 1,
) -> list[CellResult]:
    """Run the full (method x classifier x n x fold) grid.

    Results are canonically ordered by the requested method/classifier order,
    then n, then fold, so output is identical for any jobs setting.
    """
    for method in methods:
        if method not in METHOD_NAMES:
            raise ValueError(f"unknown method {method!r}")
    for classifier in classifiers:
        if classifier not in learn.ALGORITHM_NAMES:
            raise ValueError(f"unknown classifier {classifier!r}")

    embedding_paths = embedding_paths or {}
    missing = [
        m for m in methods if m in TRANSFORMER_METHODS and m not in embedding_paths
    ]
    if missing:
        raise ValueError(
            "no embedding file configured for transformer method(s): "
            + ", ".join(sorted(missing))
        )

    all_ids = [doc.doc_id for doc in dataset]
    # validate every embedding file up front, before any training starts
    embedding_matrices = {
        m: load_embeddings(embedding_paths[m], all_ids)
        for m in methods
        if m in TRANSFORMER_METHODS
    }

    tokens = [preprocess(doc.text) for doc in dataset]

    units: list[_UnitPayload] = []
    for n in n_values:
        subset = select_top_n(dataset, n)
        subset_ids = {doc.doc_id for doc in subset}
        indices = [i for i, doc in enumerate(dataset) if doc.doc_id in subset_ids]
        subset_tokens = [tokens[i] for i in indices]
        subset_doc_ids = [all_ids[i] for i in indices]
        labels = np.array([dataset[i].label for i in indices])
        plan = make_folds(labels, derive_seed(seed, "folds", n))
        for method in methods:
            embeddings = None
            if method in TRANSFORMER_METHODS:
                matrix = embedding_matrices[method]
                row_of = {doc_id: i for i, doc_id in enumerate(matrix.row_ids)}
                rows = [row_of[doc_id] for doc_id in subset_doc_ids]
                embeddings = FeatureMatrix(
                    data=matrix.dense()[rows], row_ids=subset_doc_ids
                )
            for fold_index, fold in enumerate(plan.folds):
                units.append(
                    _UnitPayload(
                        method=method,
                        n=n,
                        fold_index=fold_index,
                        fold=fold,
                        classifiers=tuple(classifiers),
                        tokens=subset_tokens,
                        doc_ids=subset_doc_ids,
                        labels=labels,
                        master_seed=seed,
                        embeddings=embeddings,
                    )
                )

    if jobs == 1:
        unit_results = [_run_unit(u) for u in units]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            unit_results = list(executor.map(_run_unit, units))

    cells = [cell for batch in unit_results for cell in batch]
    method_order = {m: i for i, m in enumerate(methods)}
    classifier_order = {c: i for i, c in enumerate(classifiers)}
    cells.sort(
        key=lambda c: (
            method_order[c.method],
            classifier_order[c.classifier],
            c.n,
            c.fold,
        )
    )
    return cells


def round_half_up_percent(value: float) -> int:
    """Integer percentage with exact halves rounding up (0.775 -> 78)."""
    return int(math.floor(value * 100.0 + 0.5 + 1e-9))


@dataclass(frozen=True)
class Aggregate:
    minimum: float
    maximum: float
    mean: float

    def render(self) -> str:
        return (
            f"{round_half_up_percent(self.minimum)}-"
            f"{round_half_up_percent(self.maximum)}"
            f"({round_half_up_percent(self.mean)})"
        )


@dataclass
class ReportTable:
    """Per (method, classifier): min/max/mean of each metric over all (n, fold) cells."""

    methods: list[str]
    classifiers: list[str]
    entries: dict[tuple[str, str, str], Aggregate]

    def cell(self, method: str, classifier: str, metric: str) -> Aggregate:
        return self.entries[(method, classifier, metric)]


def aggregate(cells: Sequence[CellResult]) -> ReportTable:
    if not cells:
        raise ValueError("no cells to aggregate")
    methods: list[str] = []
    classifiers: list[str] = []
    grouped: dict[tuple[str, str], list[MetricsCell]] = {}
    for cell in cells:
        if cell.method not in methods:
            methods.append(cell.method)
        if cell.classifier not in classifiers:
            classifiers.append(cell.classifier)
        grouped.setdefault((cell.method, cell.classifier), []).append(cell.metrics)

    entries = {}
    for (method, classifier), metric_cells in grouped.items():
        for metric in METRIC_NAMES:
            values = [getattr(m, metric) for m in metric_cells]
            entries[(method, classifier, metric)] = Aggregate(
                minimum=min(values), maximum=max(values), mean=sum(values) / len(values)
            )
    return ReportTable(methods=methods, classifiers=classifiers, entries=entries)


def render_table(table: ReportTable, style: str = "md") -> str:
    header = ["Method", "Classifier", "Precision", "Recall", "F1", "AUC"]
    rows = []
    for method in table.methods:
        for classifier in table.classifiers:
            if (method, classifier, "precision") not in table.entries:
                continue
            rows.append(
                [
                    method,
                    DISPLAY_NAMES.get(classifier, classifier),
                    *(
                        table.cell(method, classifier, metric).render()
                        for metric in METRIC_NAMES
                    ),
                ]
            )
    if style == "md":
        lines = [
            "| " + " | ".join(header) + " |",
            "|" + "|".join(["---"] * len(header)) + "|",
        ]
        lines += ["| " + " | ".join(row) + " |" for row in rows]
        return "\n".join(lines)
    widths = [
        max(len(str(x)) for x in [header[i]] + [row[i] for row in rows])
        for i in range(len(header))
    ]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header))]
    lines += [
        "  ".join(str(x).ljust(widths[i]) for i, x in enumerate(row)) for row in rows
    ]
    return "\n".join(lines)


RESULTS_HEADER = ["method", "classifier", "n", "fold", *METRIC_NAMES]


def write_results_csv(cells: Sequence[CellResult], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(RESULTS_HEADER)
        for cell in cells:
            writer.writerow(
                [
                    cell.method,
                    cell.classifier,
                    cell.n,
                    cell.fold,
                    *(f"{value:.6f}" for value in cell.metrics.as_tuple()),
                ]
            )


def read_results_csv(path: str | Path) -> list[CellResult]:
    cells = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty results file") from None
        if header != RESULTS_HEADER:
            raise ValueError(f"{path}:1: unexpected header {header!r}")
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                cells.append(
                    CellResult(
                        method=row[0],
                        classifier=row[1],
                        n=int(row[2]),
                        fold=int(row[3]),
                        metrics=MetricsCell(*(float(v) for v in row[4:8])),
                    )
                )
            except (IndexError, ValueError) as exc:
                raise ValueError(f"{path}:{lineno}: malformed row: {exc}") from None
    if not cells:
        raise ValueError(f"{path}: no cells")
    return cells


def write_table_csv(table: ReportTable, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["method", "classifier", *METRIC_NAMES])
        for method in table.methods:
            for classifier in table.classifiers:
                if (method, classifier, "precision") not in table.entries:
                    continue
                writer.writerow(
                    [
                        method,
                        DISPLAY_NAMES.get(classifier, classifier),
                        *(
                            table.cell(method, classifier, metric).render()
                            for metric in METRIC_NAMES
                        ),
                    ]
                )


def write_distributions(cells: Sequence[CellResult], out_dir: str | Path) -> list[Path]:
    """One CSV per metric: columns are methods, rows are that method's cells
    ordered by (classifier, n, fold)."""
    out_dir = Path(out_dir)
    methods: list[str] = []
    for cell in cells:
        if cell.method not in methods:
            methods.append(cell.method)
    by_method: dict[str, list[CellResult]] = {m: [] for m in methods}
    for cell in cells:
        by_method[cell.method].append(cell)
    for method in methods:
        by_method[method].sort(key=lambda c: (c.classifier, c.n, c.fold))

    paths = []
    depth = max(len(v) for v in by_method.values())
    for metric in METRIC_NAMES:
        path = out_dir / f"dist_{metric}.csv"
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(methods)
            for i in range(depth):
                writer.writerow(
                    [
                        f"{getattr(by_method[m][i].metrics, metric):.6f}"
                        if i < len(by_method[m])
                        else ""
                        for m in methods
                    ]
                )
        paths.append(path)
    return paths


def emit_report(
    cells: Sequence[CellResult],
    out_dir: str | Path,
    table_format: str = "md",
    include_results: bool = True,
) -> ReportTable:
    """Write the per-cell CSV, the rendered A-B(C) table, and the per-metric
    distribution exports. Returns the aggregated table."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    table = aggregate(cells)
    if include_results:
        write_results_csv(cells, out_dir / "results.csv")
    write_table_csv(table, out_dir / "table.csv")
    suffix = "md" if table_format == "md" else "txt"
    (out_dir / f"table.{suffix}").write_text(
        render_table(table, style=table_format) + "\n", encoding="utf-8"
    )
    write_distributions(cells, out_dir)
    return table
