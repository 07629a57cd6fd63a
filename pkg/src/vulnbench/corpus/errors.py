"""Errors raised while ingesting MITRE feeds."""

from __future__ import annotations


class FeedParseError(ValueError):
    """Malformed feed content. Carries location info when available."""

    def __init__(self, message: str, *, byte_offset: int | None = None, path: str | None = None):
        location = []
        if path is not None:
            location.append(path)
        if byte_offset is not None:
            location.append(f"byte {byte_offset}")
        if location:
            message = f"{message} ({', '.join(location)})"
        super().__init__(message)
        self.byte_offset = byte_offset
        self.path = path


class UnsupportedSchemaError(FeedParseError):
    """Feed is well formed but uses a schema version this parser does not support."""
