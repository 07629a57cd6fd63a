"""NVD CVE feed parsing (JSON 1.1 schema and the simplified line-delimited form)."""

from __future__ import annotations

import gzip
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO

from ._xml import read_source
from .errors import FeedParseError
from .records import VulnerabilityRecord, is_valid_cve_id

_CWE_REF = re.compile(r"CWE-(\d+)")


@dataclass
class CveParseResult:
    records: list[VulnerabilityRecord] = field(default_factory=list)
    skipped_missing_id: int = 0

    def extend(self, other: "CveParseResult") -> None:
        self.records.extend(other.records)
        self.skipped_missing_id += other.skipped_missing_id


def _extract_cwe_ids(problemtype: dict) -> frozenset[int]:
    # "NVD-CWE-noinfo" / "NVD-CWE-Other" markers carry no CWE number and are skipped.
    ids = set()
    for entry in problemtype.get("problemtype_data", []):
        for description in entry.get("description", []):
            match = _CWE_REF.fullmatch(description.get("value", ""))
            if match:
                ids.add(int(match.group(1)))
    return frozenset(ids)


def _english_description(cve: dict) -> str:
    for entry in cve.get("description", {}).get("description_data", []):
        if entry.get("lang", "en") == "en":
            return entry.get("value", "")
    return ""


def _parse_nvd_document(document: dict, *, path: str | None = None) -> CveParseResult:
    result = CveParseResult()
    seen: set[str] = set()
    items = document.get("CVE_Items")
    if items is None:
        raise FeedParseError("NVD feed has no CVE_Items array", path=path)
    for item in items:
        cve = item.get("cve", {})
        cve_id = cve.get("CVE_data_meta", {}).get("ID")
        if not cve_id or not is_valid_cve_id(cve_id):
            result.skipped_missing_id += 1
            continue
        if cve_id in seen:
            raise FeedParseError(f"duplicate CVE id {cve_id}", path=path)
        seen.add(cve_id)
        result.records.append(
            VulnerabilityRecord(
                cve_id=cve_id,
                description=_english_description(cve),
                referenced_cwe_ids=_extract_cwe_ids(cve.get("problemtype", {})),
            )
        )
    return result


def _parse_simplified_lines(data: bytes, *, path: str | None = None) -> CveParseResult:
    result = CveParseResult()
    seen: set[str] = set()
    for lineno, line in enumerate(data.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FeedParseError(
                f"malformed JSON on line {lineno}: {exc.msg}", path=path
            ) from exc
        cve_id = obj.get("cve_id")
        if not cve_id or not is_valid_cve_id(cve_id):
            result.skipped_missing_id += 1
            continue
        if cve_id in seen:
            raise FeedParseError(f"duplicate CVE id {cve_id} on line {lineno}", path=path)
        seen.add(cve_id)
        result.records.append(
            VulnerabilityRecord(
                cve_id=cve_id,
                description=obj.get("description", ""),
                referenced_cwe_ids=frozenset(int(c) for c in obj.get("cwes", [])),
            )
        )
    return result


def parse_cve_feed(source: bytes | str | IO[bytes], *, path: str | None = None) -> CveParseResult:
    """Parse one CVE feed.

    Accepts either an NVD JSON 1.1 feed document or the simplified
    one-object-per-line snapshot form; the two are distinguished by whether
    the whole payload parses as a single object with a CVE_Items array.
    """
    data = read_source(source)
    if data[:2] == b"\x1f\x8b":
        data = gzip.decompress(data)
    stripped = data.strip()
    if not stripped:
        return CveParseResult()

    first_line = stripped.splitlines()[0]
    try:
        head = json.loads(first_line)
    except json.JSONDecodeError:
        head = None
    if isinstance(head, dict) and "cve_id" in head:
        return _parse_simplified_lines(stripped, path=path)

    try:
        document = json.loads(stripped)
    except json.JSONDecodeError as exc:
        raise FeedParseError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            byte_offset=exc.pos,
            path=path,
        ) from exc
    return _parse_nvd_document(document, path=path)


def parse_cve_feed_directory(directory: str | Path) -> CveParseResult:
    """Parse every .json / .json.gz / .jsonl feed file in a directory, sorted by name."""
    directory = Path(directory)
    feeds = sorted(
        p
        for p in directory.iterdir()
        if p.suffixes and p.suffixes[0] in (".json", ".jsonl")
    )
    if not feeds:
        raise FeedParseError(f"no feed files found in {directory}")
    combined = CveParseResult()
    for feed in feeds:
        combined.extend(parse_cve_feed(feed.read_bytes(), path=str(feed)))
    ids = {record.cve_id for record in combined.records}
    if len(ids) != len(combined.records):
        raise FeedParseError(f"duplicate CVE ids across feed files in {directory}")
    return combined
