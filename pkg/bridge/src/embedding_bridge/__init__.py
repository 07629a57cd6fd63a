"""Embedding bridge: standalone batch inference writing the vulnbench exchange format."""

from .embedder import (
    SUPPORTED_MODELS,
    BridgeError,
    BridgeJob,
    ModelUnavailableError,
    embed_corpus,
    read_dataset_texts,
)

__all__ = [
    "SUPPORTED_MODELS",
    "BridgeError",
    "BridgeJob",
    "ModelUnavailableError",
    "embed_corpus",
    "read_dataset_texts",
]
