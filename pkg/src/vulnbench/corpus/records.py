"""Record types for one MITRE snapshot: attack patterns, weaknesses, vulnerabilities."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

CVE_ID_PATTERN = re.compile(r"CVE-\d{4}-\d{4,}")


def is_valid_cve_id(cve_id: str) -> bool:
    return CVE_ID_PATTERN.fullmatch(cve_id) is not None


@dataclass(frozen=True)
class AttackPatternRecord:
    """One CAPEC attack pattern with its referenced weaknesses."""

    capec_id: int
    name: str
    description: str
    related_weakness_ids: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.capec_id <= 0:
            raise ValueError(f"capec_id must be positive, got {self.capec_id}")


@dataclass(frozen=True)
class WeaknessRecord:
    """One CWE weakness with the CVE ids cited as observed examples."""

    cwe_id: int
    name: str
    observed_cve_ids: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.cwe_id <= 0:
            raise ValueError(f"cwe_id must be positive, got {self.cwe_id}")


@dataclass(frozen=True)
class VulnerabilityRecord:
    """One CVE entry with the CWE ids referenced in its problem type."""

    cve_id: str
    description: str
    referenced_cwe_ids: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not is_valid_cve_id(self.cve_id):
            raise ValueError(f"malformed CVE id: {self.cve_id!r}")


@dataclass(frozen=True)
class LabeledDocument:
    """One classification instance: an attack-pattern description labeled with a CVE id."""

    doc_id: str
    capec_id: int
    text: str
    label: str
