"""CLI for the embedding bridge."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .embedder import (
    SUPPORTED_MODELS,
    BridgeError,
    BridgeJob,
    ModelUnavailableError,
    embed_corpus,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="embed",
        description="Embed dataset descriptions with a pre-trained sentence "
        "transformer and write the exchange file consumed by vulnbench.",
    )
    parser.add_argument("--dataset", required=True, help="dataset.jsonl path")
    parser.add_argument("--model", required=True, choices=SUPPORTED_MODELS)
    parser.add_argument("--out", required=True, help="output embedding file")
    parser.add_argument("--batch-size", type=int, default=32)
    parser.add_argument(
        "--model-path",
        help="local directory holding the named model's weights (offline use)",
    )
    parser.add_argument(
        "--raw-text",
        action="store_true",
        help="embed the text field as-is even if it is not preprocessed",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    dataset_path = Path(args.dataset)
    if not dataset_path.exists():
        print(f"error: dataset path does not exist: {dataset_path}", file=sys.stderr)
        return 2
    job = BridgeJob(
        dataset_path=dataset_path,
        model=args.model,
        output_path=Path(args.out),
        batch_size=args.batch_size,
        model_path=Path(args.model_path) if args.model_path else None,
        allow_raw_text=args.raw_text,
    )
    try:
        count = embed_corpus(job)
    except ModelUnavailableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BridgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out} ({count} embeddings, model {args.model})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
