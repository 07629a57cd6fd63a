"""CAPEC attack-pattern XML parsing."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO

from ._xml import inner_text, parse_root, read_source, tag_namespace
from .errors import FeedParseError, UnsupportedSchemaError
from .records import AttackPatternRecord

CAPEC_NAMESPACE = "http://capec.mitre.org/capec-3"


@dataclass
class CapecParseResult:
    records: list[AttackPatternRecord] = field(default_factory=list)
    dropped_empty_description: int = 0
    excluded_deprecated: int = 0


def parse_capec(source: bytes | str | IO[bytes]) -> CapecParseResult:
    """Parse a CAPEC v3.x catalog into attack-pattern records.

    Deprecated entries are excluded and entries without a usable description
    are dropped; both are counted on the result.
    """
    data = read_source(source)
    root = parse_root(data)
    namespace = tag_namespace(root)
    if namespace != CAPEC_NAMESPACE:
        raise UnsupportedSchemaError(
            f"unsupported CAPEC schema namespace {namespace!r}, expected {CAPEC_NAMESPACE!r}"
        )

    ns = {"capec": CAPEC_NAMESPACE}
    result = CapecParseResult()
    seen: set[int] = set()
    for pattern in root.iterfind(".//capec:Attack_Patterns/capec:Attack_Pattern", ns):
        raw_id = pattern.get("ID")
        if raw_id is None or not raw_id.isdigit():
            raise FeedParseError(f"attack pattern without a numeric ID attribute: {raw_id!r}")
        capec_id = int(raw_id)
        if capec_id in seen:
            raise FeedParseError(f"duplicate CAPEC id {capec_id}")
        seen.add(capec_id)

        if pattern.get("Status", "") == "Deprecated":
            result.excluded_deprecated += 1
            continue

        description = inner_text(pattern.find("capec:Description", ns))
        if not description:
            result.dropped_empty_description += 1
            continue

        weakness_ids = set()
        for related in pattern.iterfind(
            "capec:Related_Weaknesses/capec:Related_Weakness", ns
        ):
            cwe_id = related.get("CWE_ID")
            if cwe_id and cwe_id.isdigit():
                weakness_ids.add(int(cwe_id))

        result.records.append(
            AttackPatternRecord(
                capec_id=capec_id,
                name=pattern.get("Name", ""),
                description=description,
                related_weakness_ids=frozenset(weakness_ids),
            )
        )
    return result
