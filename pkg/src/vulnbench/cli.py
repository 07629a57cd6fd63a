"""Command-line orchestration: ingest, preprocess, featurize, bench, report."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import corpus, evaluation, features
from .textprep import join_tokens, preprocess

METHOD_ALIASES = {name: name for name in evaluation.METHOD_NAMES}
CLASSIFIER_ALIASES = {
    "knn": "knn",
    "nb": "gaussian_nb",
    "gaussian_nb": "gaussian_nb",
    "svm": "svm_rbf",
    "svm_rbf": "svm_rbf",
    "rf": "random_forest",
    "random_forest": "random_forest",
    "dt": "decision_tree",
    "decision_tree": "decision_tree",
    "nn": "mlp",
    "mlp": "mlp",
}

ALL_CLASSIFIERS = ["knn", "gaussian_nb", "svm_rbf", "random_forest", "decision_tree", "mlp"]
DEFAULT_SEED = 42


class CliError(Exception):
    """Validation failure; maps to exit code 2."""


@dataclass
class RunConfig:
    """Declarative benchmark run; flags override config-file values."""

    dataset: str | None = None
    methods: list[str] = field(default_factory=lambda: ["tfidf", "lsi"])
    classifiers: list[str] = field(default_factory=lambda: list(ALL_CLASSIFIERS))
    n_values: list[int] = field(default_factory=lambda: [2, 3, 4, 5, 6])
    seed: int = DEFAULT_SEED
    jobs: int = 0  # 0 = available parallelism
    out: str = "out"
    embeddings: dict[str, str] = field(default_factory=dict)


def _parse_methods(raw: str) -> list[str]:
    if raw.strip().lower() == "all":
        return list(evaluation.METHOD_NAMES)
    methods = []
    for part in raw.split(","):
        name = part.strip().lower()
        if name not in METHOD_ALIASES:
            raise CliError(
                f"unknown method {name!r}; valid: {', '.join(evaluation.METHOD_NAMES)} or 'all'"
            )
        methods.append(METHOD_ALIASES[name])
    return methods


def _parse_classifiers(raw: str) -> list[str]:
    if raw.strip().lower() == "all":
        return list(ALL_CLASSIFIERS)
    names = []
    for part in raw.split(","):
        name = part.strip().lower()
        if name not in CLASSIFIER_ALIASES:
            raise CliError(
                f"unknown classifier {name!r}; valid: {', '.join(sorted(set(CLASSIFIER_ALIASES)))} or 'all'"
            )
        canonical = CLASSIFIER_ALIASES[name]
        if canonical not in names:
            names.append(canonical)
    return names


def _parse_n_values(raw: str) -> list[int]:
    values: list[int] = []
    for part in raw.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    if not values or any(v < 2 for v in values):
        raise CliError(f"invalid n specification {raw!r}; values must be >= 2")
    return sorted(set(values))


def _parse_embedding_specs(specs: list[str]) -> dict[str, str]:
    mapping = {}
    for spec in specs:
        if "=" not in spec:
            raise CliError(
                f"embedding spec {spec!r} must look like method=path (e.g. minilm=emb.jsonl)"
            )
        method, path = spec.split("=", 1)
        method = method.strip().lower()
        if method not in evaluation.TRANSFORMER_METHODS:
            raise CliError(
                f"embedding spec names unknown transformer method {method!r}"
            )
        mapping[method] = path
    return mapping


def _require_path(path: str | Path, kind: str) -> Path:
    resolved = Path(path)
    if not resolved.exists():
        raise CliError(f"{kind} path does not exist: {resolved}")
    return resolved


def cmd_ingest(args: argparse.Namespace) -> int:
    if args.snapshot:
        snapshot_dir = _require_path(args.snapshot, "snapshot")
        snapshot = corpus.load_snapshot(snapshot_dir)
        patterns, weaknesses, vulnerabilities = (
            snapshot.patterns,
            snapshot.weaknesses,
            snapshot.vulnerabilities,
        )
    else:
        if not (args.capec and args.cwe and args.nvd):
            raise CliError("ingest needs either --snapshot or all of --capec/--cwe/--nvd")
        capec_path = _require_path(args.capec, "CAPEC")
        cwe_path = _require_path(args.cwe, "CWE")
        nvd_dir = _require_path(args.nvd, "NVD feed directory")
        capec_result = corpus.parse_capec(capec_path.read_bytes())
        if capec_result.excluded_deprecated or capec_result.dropped_empty_description:
            print(
                f"capec: excluded {capec_result.excluded_deprecated} deprecated, "
                f"dropped {capec_result.dropped_empty_description} empty-description entries",
                file=sys.stderr,
            )
        cve_result = corpus.parse_cve_feed_directory(nvd_dir)
        if cve_result.skipped_missing_id:
            print(
                f"nvd: skipped {cve_result.skipped_missing_id} items without a CVE id",
                file=sys.stderr,
            )
        patterns = capec_result.records
        weaknesses = corpus.parse_cwe(cwe_path.read_bytes()).records
        vulnerabilities = cve_result.records

    graph = corpus.build_linkage(patterns, weaknesses, vulnerabilities)
    if graph.dangling_dropped:
        print(f"linkage: dropped {graph.dangling_dropped} dangling references", file=sys.stderr)
    stats = corpus.linkage_stats(graph, patterns, weaknesses, vulnerabilities)
    dataset = corpus.derive_dataset(graph, patterns)

    print(corpus.format_stats(stats))
    print(f"derived dataset: {len(dataset)} instances, "
          f"{len({d.label for d in dataset})} distinct labels")

    if args.dry_run:
        print("dry run: nothing written", file=sys.stderr)
        return 0
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    dataset_path = out_dir / "dataset.jsonl"
    corpus.write_dataset(dataset, dataset_path)
    print(f"wrote {dataset_path}")
    return 0


def cmd_preprocess(args: argparse.Namespace) -> int:
    dataset_path = _require_path(args.dataset, "dataset")
    documents = corpus.read_dataset(dataset_path)
    out_path = Path(args.out)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    processed = [
        corpus.LabeledDocument(
            doc_id=doc.doc_id,
            capec_id=doc.capec_id,
            text=join_tokens(preprocess(doc.text)),
            label=doc.label,
        )
        for doc in documents
    ]
    corpus.write_dataset(processed, out_path)
    print(f"wrote {out_path} ({len(processed)} documents)")
    return 0


def cmd_featurize(args: argparse.Namespace) -> int:
    dataset_path = _require_path(args.dataset, "dataset")
    documents = corpus.read_dataset(dataset_path)
    method = args.method.strip().lower()
    if method not in evaluation.METHOD_NAMES:
        raise CliError(f"unknown method {method!r}")
    doc_ids = [doc.doc_id for doc in documents]
    if method in evaluation.TRANSFORMER_METHODS:
        if not args.embeddings:
            raise CliError(f"method {method!r} needs --embeddings method=path")
        mapping = _parse_embedding_specs(args.embeddings)
        if method not in mapping:
            raise CliError(f"no embedding file given for {method!r}")
        matrix = features.load_embeddings(_require_path(mapping[method], "embeddings"), doc_ids)
        dense = matrix.dense()
    else:
        tokens = [preprocess(doc.text) for doc in documents]
        vocab, idf = features.fit_tfidf(tokens)
        tfidf = features.transform_corpus(tokens, vocab, idf, row_ids=doc_ids)
        if method == "lsi":
            k = features.default_lsi_topics(tfidf.rows, tfidf.cols)
            model = features.fit_lsi(tfidf, k)
            dense = features.project_matrix(tfidf, model).dense()
        else:
            dense = tfidf.dense()
    out_path = Path(args.out)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    np.savez_compressed(out_path, features=dense, doc_ids=np.array(doc_ids))
    print(f"wrote {out_path} ({dense.shape[0]}x{dense.shape[1]})")
    return 0


def _load_config_file(path: str) -> dict:
    config_path = _require_path(path, "config")
    try:
        payload = json.loads(config_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CliError(f"config {config_path}: malformed JSON: {exc.msg}") from exc
    if not isinstance(payload, dict):
        raise CliError(f"config {config_path}: expected a JSON object")
    return payload


def _resolve_run_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    if args.config:
        payload = _load_config_file(args.config)
        unknown = set(payload) - {
            "dataset", "methods", "classifiers", "n_values", "seed", "jobs",
            "out", "embeddings",
        }
        if unknown:
            raise CliError(f"config has unknown keys: {', '.join(sorted(unknown))}")
        config.dataset = payload.get("dataset", config.dataset)
        if "methods" in payload:
            config.methods = _parse_methods(",".join(payload["methods"]))
        if "classifiers" in payload:
            config.classifiers = _parse_classifiers(",".join(payload["classifiers"]))
        if "n_values" in payload:
            config.n_values = _parse_n_values(
                ",".join(str(v) for v in payload["n_values"])
            )
        config.seed = payload.get("seed", config.seed)
        config.jobs = payload.get("jobs", config.jobs)
        config.out = payload.get("out", config.out)
        config.embeddings = dict(payload.get("embeddings", {}))

    if args.dataset:
        config.dataset = args.dataset
    if args.methods:
        config.methods = _parse_methods(args.methods)
    if args.classifiers:
        config.classifiers = _parse_classifiers(args.classifiers)
    if args.n:
        config.n_values = _parse_n_values(args.n)
    if args.seed is not None:
        config.seed = args.seed
    if args.jobs is not None:
        config.jobs = args.jobs
    if args.out:
        config.out = args.out
    if args.embeddings:
        config.embeddings.update(_parse_embedding_specs(args.embeddings))

    if not config.dataset:
        raise CliError("no dataset given (flag --dataset or config key 'dataset')")
    return config


def cmd_bench(args: argparse.Namespace) -> int:
    config = _resolve_run_config(args)
    dataset_path = _require_path(config.dataset, "dataset")

    requested_transformers = [
        m for m in config.methods if m in evaluation.TRANSFORMER_METHODS
    ]
    missing = [m for m in requested_transformers if m not in config.embeddings]
    if missing:
        raise CliError(
            "missing embedding files for transformer method(s): " + ", ".join(missing)
        )
    for method in requested_transformers:
        _require_path(config.embeddings[method], f"{method} embeddings")

    documents = corpus.read_dataset(dataset_path)
    jobs = config.jobs if config.jobs > 0 else (os.cpu_count() or 1)
    print(
        f"bench: seed={config.seed} methods={','.join(config.methods)} "
        f"classifiers={','.join(config.classifiers)} "
        f"n={','.join(str(v) for v in config.n_values)} jobs={jobs}"
    )
    cells = evaluation.run_benchmark(
        documents,
        config.methods,
        config.classifiers,
        config.n_values,
        seed=config.seed,
        embedding_paths=config.embeddings,
        jobs=jobs,
    )
    table = evaluation.emit_report(cells, config.out, table_format=args.format)
    print(evaluation.render_table(table, style=args.format))
    print(f"wrote {Path(config.out) / 'results.csv'} ({len(cells)} cells)")
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    results_path = _require_path(args.results, "results")
    try:
        cells = evaluation.read_results_csv(results_path)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    file_format = "md" if args.format == "csv" else args.format
    table = evaluation.emit_report(
        cells, args.out, table_format=file_format, include_results=False
    )
    if args.format == "csv":
        print((Path(args.out) / "table.csv").read_text(encoding="utf-8"), end="")
    else:
        print(evaluation.render_table(table, style=args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vulnbench",
        description="Benchmark feature-extraction methods for mapping attack-pattern "
        "descriptions to CVE labels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ingest = sub.add_parser("ingest", help="parse feeds, build linkage, derive dataset")
    ingest.add_argument("--snapshot", help="directory with patterns/weaknesses/vulns jsonl files")
    ingest.add_argument("--capec", help="CAPEC XML file")
    ingest.add_argument("--cwe", help="CWE XML file")
    ingest.add_argument("--nvd", help="directory of NVD JSON feed files")
    ingest.add_argument("--out", default="out", help="output directory")
    ingest.add_argument("--dry-run", action="store_true", help="validate inputs, write nothing")

    pre = sub.add_parser("preprocess", help="write dataset with preprocessed text")
    pre.add_argument("--dataset", required=True, help="dataset.jsonl path")
    pre.add_argument("--out", required=True, help="output jsonl path")

    feat = sub.add_parser("featurize", help="dump one method's feature matrix")
    feat.add_argument("--dataset", required=True)
    feat.add_argument("--method", required=True)
    feat.add_argument("--embeddings", action="append", default=[],
                      metavar="METHOD=PATH")
    feat.add_argument("--out", required=True, help="output .npz path")

    bench = sub.add_parser("bench", help="run the benchmark grid")
    bench.add_argument("--dataset")
    bench.add_argument("--config", help="JSON config file mirroring the run options")
    bench.add_argument("--methods", help="comma list or 'all'")
    bench.add_argument("--classifiers", help="comma list or 'all'")
    bench.add_argument("--n", help="e.g. 2-6 or 2,3,4")
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--jobs", type=int, default=None,
                       help="parallel workers (default: available cores)")
    bench.add_argument("--out")
    bench.add_argument("--embeddings", action="append", default=[],
                       metavar="METHOD=PATH")
    bench.add_argument("--format", choices=("md", "txt"), default="md")

    report = sub.add_parser("report", help="re-render outputs from an existing results CSV")
    report.add_argument("--results", required=True)
    report.add_argument("--out", default="out")
    report.add_argument("--format", choices=("md", "txt", "csv"), default="md")

    return parser


_COMMANDS = {
    "ingest": cmd_ingest,
    "preprocess": cmd_preprocess,
    "featurize": cmd_featurize,
    "bench": cmd_bench,
    "report": cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        corpus.FeedParseError,
        features.EmbeddingFormatError,
        evaluation.CellExecutionError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
