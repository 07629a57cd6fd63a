"""CWE weakness-catalog XML parsing."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import IO

from ._xml import parse_root, read_source, tag_namespace
from .errors import FeedParseError, UnsupportedSchemaError
from .records import CVE_ID_PATTERN, WeaknessRecord

# Catalog schema 6 covers CWE content v3/v4; schema 7 is the current line.
CWE_NAMESPACES = ("http://cwe.mitre.org/cwe-6", "http://cwe.mitre.org/cwe-7")


@dataclass
class CweParseResult:
    records: list[WeaknessRecord] = field(default_factory=list)


def parse_cwe(source: bytes | str | IO[bytes]) -> CweParseResult:
    """Parse a CWE catalog, collecting observed-example CVE ids per weakness."""
    data = read_source(source)
    root = parse_root(data)
    namespace = tag_namespace(root)
    if namespace not in CWE_NAMESPACES:
        raise UnsupportedSchemaError(
            f"unsupported CWE schema namespace {namespace!r}, expected one of {CWE_NAMESPACES}"
        )

    ns = {"cwe": namespace}
    result = CweParseResult()
    seen: set[int] = set()
    for weakness in root.iterfind(".//cwe:Weaknesses/cwe:Weakness", ns):
        raw_id = weakness.get("ID")
        if raw_id is None or not raw_id.isdigit():
            raise FeedParseError(f"weakness without a numeric ID attribute: {raw_id!r}")
        cwe_id = int(raw_id)
        if cwe_id in seen:
            raise FeedParseError(f"duplicate CWE id {cwe_id}")
        seen.add(cwe_id)

        observed = set()
        for example in weakness.iterfind(
            "cwe:Observed_Examples/cwe:Observed_Example", ns
        ):
            reference = example.findtext("cwe:Reference", default="", namespaces=ns)
            match = CVE_ID_PATTERN.search(reference)
            if match:
                observed.add(match.group(0))

        result.records.append(
            WeaknessRecord(
                cwe_id=cwe_id,
                name=weakness.get("Name", ""),
                observed_cve_ids=frozenset(observed),
            )
        )
    return result
