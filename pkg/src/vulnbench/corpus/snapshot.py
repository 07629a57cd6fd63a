"""Bundled snapshot I/O: line-delimited JSON files pinned as the test fixture of record."""

from __future__ import annotations

import gzip
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator

from .errors import FeedParseError
from .records import (
    AttackPatternRecord,
    LabeledDocument,
    VulnerabilityRecord,
    WeaknessRecord,
    is_valid_cve_id,
)

PATTERNS_FILE = "patterns.jsonl"
WEAKNESSES_FILE = "weaknesses.jsonl"
VULNS_FILE = "vulns.jsonl"


@dataclass
class Snapshot:
    patterns: list[AttackPatternRecord]
    weaknesses: list[WeaknessRecord]
    vulnerabilities: list[VulnerabilityRecord]


def _open_lines(path: Path) -> Iterator[tuple[int, str]]:
    opener: Callable = gzip.open if path.suffix == ".gz" else open
    with opener(path, "rt", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if line.strip():
                yield lineno, line


def _resolve(directory: Path, name: str) -> Path:
    plain = directory / name
    if plain.exists():
        return plain
    compressed = directory / (name + ".gz")
    if compressed.exists():
        return compressed
    raise FileNotFoundError(f"snapshot file not found: {plain} (or {compressed.name})")


def _iter_objects(path: Path) -> Iterator[dict]:
    for lineno, line in _open_lines(path):
        try:
            yield json.loads(line)
        except json.JSONDecodeError as exc:
            raise FeedParseError(
                f"malformed JSON on line {lineno}: {exc.msg}", path=str(path)
            ) from exc


def load_snapshot(directory: str | Path) -> Snapshot:
    """Load the three snapshot files. vulns.jsonl may be gzip-compressed."""
    directory = Path(directory)

    patterns = []
    seen_capec: set[int] = set()
    path = _resolve(directory, PATTERNS_FILE)
    for obj in _iter_objects(path):
        record = AttackPatternRecord(
            capec_id=int(obj["capec_id"]),
            name=obj.get("name", ""),
            description=obj["description"],
            related_weakness_ids=frozenset(int(c) for c in obj.get("cwes", [])),
        )
        if record.capec_id in seen_capec:
            raise FeedParseError(f"duplicate CAPEC id {record.capec_id}", path=str(path))
        seen_capec.add(record.capec_id)
        patterns.append(record)

    weaknesses = []
    seen_cwe: set[int] = set()
    path = _resolve(directory, WEAKNESSES_FILE)
    for obj in _iter_objects(path):
        record = WeaknessRecord(
            cwe_id=int(obj["cwe_id"]),
            name=obj.get("name", ""),
            observed_cve_ids=frozenset(obj.get("cves", [])),
        )
        if record.cwe_id in seen_cwe:
            raise FeedParseError(f"duplicate CWE id {record.cwe_id}", path=str(path))
        seen_cwe.add(record.cwe_id)
        weaknesses.append(record)

    vulnerabilities = []
    seen_cve: set[str] = set()
    path = _resolve(directory, VULNS_FILE)
    for obj in _iter_objects(path):
        cve_id = obj["cve_id"]
        if not is_valid_cve_id(cve_id):
            raise FeedParseError(f"malformed CVE id {cve_id!r}", path=str(path))
        if cve_id in seen_cve:
            raise FeedParseError(f"duplicate CVE id {cve_id}", path=str(path))
        seen_cve.add(cve_id)
        vulnerabilities.append(
            VulnerabilityRecord(
                cve_id=cve_id,
                description=obj.get("description", ""),
                referenced_cwe_ids=frozenset(int(c) for c in obj.get("cwes", [])),
            )
        )

    return Snapshot(patterns, weaknesses, vulnerabilities)


def write_dataset(documents: list[LabeledDocument], path: str | Path) -> None:
    """Write dataset.jsonl: one {doc_id, capec_id, text, label} object per line."""
    path = Path(path)
    with open(path, "w", encoding="utf-8") as fh:
        for doc in documents:
            fh.write(
                json.dumps(
                    {
                        "doc_id": doc.doc_id,
                        "capec_id": doc.capec_id,
                        "text": doc.text,
                        "label": doc.label,
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )


def read_dataset(path: str | Path) -> list[LabeledDocument]:
    path = Path(path)
    documents = []
    for lineno, line in _open_lines(path):
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FeedParseError(
                f"malformed JSON on line {lineno}: {exc.msg}", path=str(path)
            ) from exc
        documents.append(
            LabeledDocument(
                doc_id=obj["doc_id"],
                capec_id=int(obj["capec_id"]),
                text=obj["text"],
                label=obj["label"],
            )
        )
    return documents
