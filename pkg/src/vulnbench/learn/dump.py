"""Debug-only model dumps. Format is unstable; for inspection, not persistence."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .base import ClassifierModel

DUMP_FORMAT_VERSION = 1


def _summarize(value):
    if isinstance(value, np.ndarray):
        return {
            "shape": list(value.shape),
            "dtype": str(value.dtype),
            "l2_norm": float(np.linalg.norm(value)),
        }
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, dict):
        return {k: _summarize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_summarize(v) for v in value[:16]]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return repr(value)


def dump_model(model: ClassifierModel, path: str | Path) -> None:
    """Write a JSON summary of a trained model's parameters."""
    blob = {
        "format_version": DUMP_FORMAT_VERSION,
        "algorithm": model.algorithm,
        "class_labels": [
            label.item() if hasattr(label, "item") else label
            for label in model.class_labels
        ],
        "parameters": {
            key: _summarize(value)
            for key, value in vars(model).items()
            if key not in ("class_labels",) and not key.startswith("__")
        },
    }
    Path(path).write_text(json.dumps(blob, indent=2) + "\n", encoding="utf-8")
