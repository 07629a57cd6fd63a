"""Linkage graph over the three repositories and the derived labeled dataset."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .records import AttackPatternRecord, LabeledDocument, VulnerabilityRecord, WeaknessRecord


@dataclass(frozen=True)
class LinkageGraph:
    """Tripartite reference graph: patterns -> weaknesses -> vulnerabilities.

    pattern_to_vulnerability is the relational join of the two edge sets.
    dangling_dropped counts references whose endpoint is absent from the snapshot.
    """

    pattern_to_weakness: frozenset[tuple[int, int]]
    weakness_to_vulnerability: frozenset[tuple[int, str]]
    pattern_to_vulnerability: frozenset[tuple[int, str]]
    dangling_dropped: int = 0


@dataclass(frozen=True)
class RepositoryStats:
    repository: str
    linked: int
    not_linked: int
    total: int


def build_linkage(
    patterns: Sequence[AttackPatternRecord],
    weaknesses: Sequence[WeaknessRecord],
    vulnerabilities: Sequence[VulnerabilityRecord],
) -> LinkageGraph:
    """Assemble the reference graph from one consistent snapshot.

    Weakness-to-vulnerability edges come from both reference directions:
    CWE observed examples and CVE problem-type entries. Dangling references
    (endpoint missing from the snapshot) are dropped and counted, not fatal.
    """
    known_cwes = {w.cwe_id for w in weaknesses}
    known_cves = {v.cve_id for v in vulnerabilities}
    dangling = 0

    pattern_to_weakness = set()
    for pattern in patterns:
        for cwe_id in pattern.related_weakness_ids:
            if cwe_id in known_cwes:
                pattern_to_weakness.add((pattern.capec_id, cwe_id))
            else:
                dangling += 1

    weakness_to_vulnerability = set()
    for weakness in weaknesses:
        for cve_id in weakness.observed_cve_ids:
            if cve_id in known_cves:
                weakness_to_vulnerability.add((weakness.cwe_id, cve_id))
            else:
                dangling += 1
    for vulnerability in vulnerabilities:
        for cwe_id in vulnerability.referenced_cwe_ids:
            if cwe_id in known_cwes:
                weakness_to_vulnerability.add((cwe_id, vulnerability.cve_id))
            else:
                dangling += 1

    cves_by_cwe: dict[int, set[str]] = {}
    for cwe_id, cve_id in weakness_to_vulnerability:
        cves_by_cwe.setdefault(cwe_id, set()).add(cve_id)

    pattern_to_vulnerability = {
        (capec_id, cve_id)
        for capec_id, cwe_id in pattern_to_weakness
        for cve_id in cves_by_cwe.get(cwe_id, ())
    }

    return LinkageGraph(
        pattern_to_weakness=frozenset(pattern_to_weakness),
        weakness_to_vulnerability=frozenset(weakness_to_vulnerability),
        pattern_to_vulnerability=frozenset(pattern_to_vulnerability),
        dangling_dropped=dangling,
    )


def derive_dataset(
    graph: LinkageGraph, patterns: Sequence[AttackPatternRecord]
) -> list[LabeledDocument]:
    """One labeled instance per (pattern, CVE) pair, ordered by (capec_id, label)."""
    descriptions = {p.capec_id: p.description for p in patterns}
    documents = []
    for capec_id, cve_id in sorted(graph.pattern_to_vulnerability):
        documents.append(
            LabeledDocument(
                doc_id=f"{capec_id}:{cve_id}",
                capec_id=capec_id,
                text=descriptions[capec_id],
                label=cve_id,
            )
        )
    return documents


def linkage_stats(
    graph: LinkageGraph,
    patterns: Sequence[AttackPatternRecord],
    weaknesses: Sequence[WeaknessRecord],
    vulnerabilities: Sequence[VulnerabilityRecord],
) -> list[RepositoryStats]:
    """Linked / not-linked / total per repository.

    A record counts as linked when it sits on at least one complete
    pattern -> weakness -> vulnerability chain.
    """
    linked_patterns = {p for p, _ in graph.pattern_to_vulnerability}
    linked_cves = {v for _, v in graph.pattern_to_vulnerability}
    cwes_with_pattern = {w for _, w in graph.pattern_to_weakness}
    cwes_with_cve = {w for w, _ in graph.weakness_to_vulnerability}
    linked_cwes = cwes_with_pattern & cwes_with_cve

    def row(name: str, linked: int, total: int) -> RepositoryStats:
        return RepositoryStats(name, linked, total - linked, total)

    return [
        row("attack_patterns", len(linked_patterns), len(patterns)),
        row("cwe_reports", len(linked_cwes), len(weaknesses)),
        row("cve_reports", len(linked_cves), len(vulnerabilities)),
    ]


def format_stats(rows: Iterable[RepositoryStats]) -> str:
    lines = [f"{'repository':<16} {'linked':>8} {'not_linked':>11} {'total':>8}"]
    for r in rows:
        lines.append(f"{r.repository:<16} {r.linked:>8} {r.not_linked:>11} {r.total:>8}")
    return "\n".join(lines)
