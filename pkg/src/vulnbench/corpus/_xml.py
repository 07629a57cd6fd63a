"""Shared helpers for the CAPEC and CWE XML parsers."""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from typing import IO

from .errors import FeedParseError

_WS = re.compile(r"\s+")


def read_source(source: bytes | str | IO[bytes]) -> bytes:
    """Accept raw bytes, a binary file object, or a filesystem path."""
    if isinstance(source, bytes):
        return source
    if hasattr(source, "read"):
        return source.read()  # type: ignore[union-attr]
    with open(source, "rb") as fh:
        return fh.read()


def byte_offset_of(data: bytes, line: int, column: int) -> int:
    """Translate a 1-based line / 0-based column position into a byte offset."""
    offset = 0
    for _ in range(line - 1):
        nl = data.find(b"\n", offset)
        if nl < 0:
            break
        offset = nl + 1
    return offset + column


def parse_root(data: bytes) -> ET.Element:
    try:
        return ET.fromstring(data)
    except ET.ParseError as exc:
        line, column = exc.position
        raise FeedParseError(
            f"malformed XML: {exc.msg if hasattr(exc, 'msg') else exc}",
            byte_offset=byte_offset_of(data, line, column),
        ) from exc


def tag_namespace(element: ET.Element) -> str:
    """Namespace URI of an element tag, or '' when unqualified."""
    tag = element.tag
    if tag.startswith("{"):
        return tag[1 : tag.index("}")]
    return ""


def inner_text(element: ET.Element | None) -> str:
    """All descendant text, whitespace-collapsed. Handles xhtml-wrapped descriptions."""
    if element is None:
        return ""
    return _WS.sub(" ", " ".join(element.itertext())).strip()
