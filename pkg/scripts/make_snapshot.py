#!/usr/bin/env python3
"""Regenerate the bundled snapshot under data/snapshot/.

The snapshot is a deterministic synthetic reconstruction pinned to the
published repository statistics: 559 attack patterns (143 linked), 935 CWE
reports (149 linked), 295604 CVE reports (685 linked). Descriptions are
synthetic security text with per-topic vocabularies so that the derived
dataset behaves like real attack-pattern prose under TF-IDF classification.

Output is byte-for-byte reproducible (fixed seed, gzip mtime pinned to 0).
"""

from __future__ import annotations

import gzip
import json
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
OUT_DIR = ROOT / "data" / "snapshot"

SEED = 20240501

TOTAL_PATTERNS = 559
TOTAL_CWES = 935
TOTAL_CVES = 295604

# pattern-set sizes of the six hub weaknesses; each hub carries exactly one
# CVE, so these become the top-6 label frequencies of the derived dataset
HUB_SIZES = [30, 27, 24, 21, 18, 15]
N_BROAD_PATTERNS = 8          # linked patterns covering the minor weaknesses
N_MINOR_CWES = 143            # linked weaknesses beyond the six hubs
N_MINOR_CVES = 679            # linked vulnerabilities beyond the six hub CVEs

N_LINKED_PATTERNS = sum(HUB_SIZES) + N_BROAD_PATTERNS        # 143
N_LINKED_CWES = len(HUB_SIZES) + N_MINOR_CWES                # 149
N_LINKED_CVES = len(HUB_SIZES) + N_MINOR_CVES                # 685

N_CWES_PATTERN_ONLY = 250     # referenced by unlinked patterns, no CVEs
N_CWES_CVE_ONLY = 300         # carry CVEs but no pattern references

THEMES = {
    "sql_injection": """
        sql injection query database statement parameter sanitize escape table
        select union payload quote backend driver orm prepared blind error
        schema column record syntax concatenate fragment
    """,
    "cross_site_scripting": """
        script browser dom cookie javascript html tag attribute event handler
        reflected stored sanitizer encode render page form origin policy
        client markup iframe element victim
    """,
    "buffer_overflow": """
        buffer overflow memory heap stack pointer allocation bound length
        copy overwrite corruption segment address offset byte shellcode
        return frame register crash size unchecked
    """,
    "path_traversal": """
        path traversal directory file dot slash separator filename resolve
        canonical root upload archive symlink escape folder read disclosure
        handler navigate restricted resource listing
    """,
    "session_hijacking": """
        session token hijack cookie identifier fixation predictable replay
        sidejacking authentication credential steal intercept transport
        expire renewal logout state timeout entropy random
    """,
    "denial_of_service": """
        flood denial service exhaustion resource amplification reflection
        bandwidth saturation queue thread connection rate packet storm
        timeout starvation loop recursion consume crash availability
    """,
    "credential_phishing": """
        phishing credential lure email spoof deceive impersonate login
        harvest clone landing domain typosquat social engineering pretext
        victim trust urgency message attachment redirect
    """,
    "crypto_weakness": """
        cipher cryptographic weak entropy random predictable seed hash
        collision padding oracle downgrade negotiate certificate trust
        signature verify truncation algorithm obsolete keyspace
    """,
}

COMMON_SECURITY = """
    attacker adversary target system application server network exploit
    vulnerability access control data information request response user
    privilege code execution remote local service leverage craft send
    inject manipulate intercept compromise malicious abuse weakness gain
    bypass security validation input output trigger victim host process
    attempt technique pattern step observe probe scan modify configuration
""".split()

FILLER = """
    the a an to of can may will and is then uses using this that by in with
    for performs attempts relies results allows causes when where which
    against through during order special certain various typical common
""".split()

PRODUCTS = """
    router webserver gateway portal firmware plugin kernel module daemon
    browser client library framework driver agent servlet controller api
    appliance switch camera printer monitor scheduler proxy loadbalancer
""".split()

IMPACTS = [
    "execute arbitrary code",
    "cause a denial of service",
    "obtain sensitive information",
    "gain elevated privileges",
    "bypass authentication",
    "read restricted files",
    "modify stored data",
    "spoof trusted content",
]

VECTORS = ["remote", "local", "adjacent", "physical", "authenticated remote"]

COMPONENTS = """
    login form query handler session manager upload module configuration
    parser request dispatcher memory allocator template engine cookie store
    packet filter certificate validator search endpoint admin console
""".split()

THEME_WORDS = {name: words.split() for name, words in THEMES.items()}
THEME_NAMES = list(THEME_WORDS)

# fraction of content words drawn from the pattern's own theme; the rest come
# from the shared security vocabulary, other themes, and filler. This is the
# main knob controlling how separable the top-n classes are.
THEME_FRACTION = 0.32
CROSS_THEME_FRACTION = 0.22


def pattern_description(rng: np.random.Generator, theme: str | None) -> str:
    n_words = int(rng.integers(55, 95))
    words = []
    theme_pool = THEME_WORDS[theme] if theme else None
    for _ in range(n_words):
        roll = rng.random()
        if theme_pool is not None and roll < THEME_FRACTION:
            words.append(theme_pool[rng.integers(len(theme_pool))])
        elif theme_pool is not None and roll < THEME_FRACTION + CROSS_THEME_FRACTION:
            other = THEME_NAMES[rng.integers(len(THEME_NAMES))]
            words.append(THEME_WORDS[other][rng.integers(len(THEME_WORDS[other]))])
        elif roll < 0.82:
            words.append(COMMON_SECURITY[rng.integers(len(COMMON_SECURITY))])
        else:
            words.append(FILLER[rng.integers(len(FILLER))])
    # sentence-case chunks with punctuation so preprocessing has work to do
    chunks = []
    i = 0
    while i < len(words):
        size = int(rng.integers(8, 15))
        chunk = words[i : i + size]
        chunks.append(chunk[0].capitalize() + " " + " ".join(chunk[1:]) + ".")
        i += size
    return " ".join(chunks)


def cve_description(rng: np.random.Generator) -> str:
    return (
        f"{PRODUCTS[rng.integers(len(PRODUCTS))].capitalize()} "
        f"{rng.integers(1, 9)}.{rng.integers(0, 9)} allows "
        f"{VECTORS[rng.integers(len(VECTORS))]} attackers to "
        f"{IMPACTS[rng.integers(len(IMPACTS))]} via the "
        f"{COMPONENTS[rng.integers(len(COMPONENTS))]}."
    )


def allocate_cve_ids(rng: np.random.Generator, total: int) -> list[str]:
    """Sequential per-year CVE numbers; volume grows with recency."""
    years = list(range(1999, 2025))
    weights = np.array([1.2**i for i in range(len(years))], dtype=np.float64)
    weights /= weights.sum()
    counts = np.floor(weights * total).astype(int)
    counts[-1] += total - counts.sum()
    ids = []
    for year, count in zip(years, counts):
        for number in range(1, count + 1):
            ids.append(f"CVE-{year}-{number:04d}")
    return ids


def main() -> None:
    rng = np.random.default_rng(SEED)
    OUT_DIR.mkdir(parents=True, exist_ok=True)

    capec_ids = sorted(rng.choice(np.arange(1, 720), size=TOTAL_PATTERNS, replace=False).tolist())
    cwe_ids = sorted(rng.choice(np.arange(1, 1450), size=TOTAL_CWES, replace=False).tolist())
    cve_ids = allocate_cve_ids(rng, TOTAL_CVES)
    assert len(cve_ids) == TOTAL_CVES and len(set(cve_ids)) == TOTAL_CVES

    # ---- carve up the id spaces ------------------------------------------
    n_hubs = len(HUB_SIZES)
    hub_cwes = cwe_ids[:n_hubs]
    minor_cwes = cwe_ids[n_hubs : n_hubs + N_MINOR_CWES]
    pattern_only_cwes = cwe_ids[
        n_hubs + N_MINOR_CWES : n_hubs + N_MINOR_CWES + N_CWES_PATTERN_ONLY
    ]
    cve_only_cwes = cwe_ids[
        n_hubs + N_MINOR_CWES + N_CWES_PATTERN_ONLY :
        n_hubs + N_MINOR_CWES + N_CWES_PATTERN_ONLY + N_CWES_CVE_ONLY
    ]

    hub_pattern_ids = []
    cursor = 0
    for size in HUB_SIZES:
        hub_pattern_ids.append(capec_ids[cursor : cursor + size])
        cursor += size
    broad_pattern_ids = capec_ids[cursor : cursor + N_BROAD_PATTERNS]
    cursor += N_BROAD_PATTERNS
    unlinked_pattern_ids = capec_ids[cursor:]

    # spread linked CVEs across years for realism: hot CVEs early in the list
    linked_cve_pool = [cve_ids[int(i)] for i in
                       np.sort(rng.choice(TOTAL_CVES, size=N_LINKED_CVES, replace=False))]
    hub_cves = linked_cve_pool[:n_hubs]
    minor_cves = linked_cve_pool[n_hubs:]

    # ---- patterns ---------------------------------------------------------
    patterns = []
    for hub_index, ids in enumerate(hub_pattern_ids):
        theme = THEME_NAMES[hub_index]
        for capec_id in ids:
            patterns.append(
                {
                    "capec_id": int(capec_id),
                    "name": f"{theme.replace('_', ' ').title()} Variant {capec_id}",
                    "description": pattern_description(rng, theme),
                    "cwes": [int(hub_cwes[hub_index])],
                }
            )

    minor_assignment = np.array_split(np.arange(N_MINOR_CWES), N_BROAD_PATTERNS)
    for broad_index, capec_id in enumerate(broad_pattern_ids):
        covered = [int(minor_cwes[i]) for i in minor_assignment[broad_index]]
        patterns.append(
            {
                "capec_id": int(capec_id),
                "name": f"Composite Attack Surface {capec_id}",
                "description": pattern_description(rng, None),
                "cwes": covered,
            }
        )

    for position, capec_id in enumerate(unlinked_pattern_ids):
        theme = THEME_NAMES[int(rng.integers(len(THEME_NAMES)))]
        if position % 3 == 0:
            cwes = []
        else:
            picks = rng.choice(len(pattern_only_cwes), size=int(rng.integers(1, 4)), replace=False)
            cwes = sorted(int(pattern_only_cwes[i]) for i in picks)
        patterns.append(
            {
                "capec_id": int(capec_id),
                "name": f"{theme.replace('_', ' ').title()} Probe {capec_id}",
                "description": pattern_description(rng, theme),
                "cwes": cwes,
            }
        )
    patterns.sort(key=lambda p: p["capec_id"])

    # ---- weakness -> CVE wiring ------------------------------------------
    minor_cve_cwe = {}  # cve id -> minor cwe id
    shard_sizes = rng.multinomial(
        N_MINOR_CVES - N_MINOR_CWES, np.full(N_MINOR_CWES, 1.0 / N_MINOR_CWES)
    ) + 1  # every minor CWE holds at least one CVE
    cursor = 0
    for cwe_index, size in enumerate(shard_sizes):
        for cve in minor_cves[cursor : cursor + size]:
            minor_cve_cwe[cve] = int(minor_cwes[cwe_index])
        cursor += size
    assert cursor == N_MINOR_CVES

    observed = {int(c): [] for c in cwe_ids}  # cwe id -> CVE ids on the CWE side
    cve_refs = {}  # cve id -> [cwe ids] on the CVE side

    for hub_index, cve in enumerate(hub_cves):
        # hub links recorded in both directions
        observed[int(hub_cwes[hub_index])].append(cve)
        cve_refs[cve] = [int(hub_cwes[hub_index])]

    for position, (cve, cwe) in enumerate(sorted(minor_cve_cwe.items())):
        direction = position % 3
        if direction == 0:
            observed[cwe].append(cve)
        elif direction == 1:
            cve_refs[cve] = [cwe]
        else:
            observed[cwe].append(cve)
            cve_refs[cve] = [cwe]

    # unlinked CVEs: 60% point at a cve-only CWE, the rest carry no reference
    linked_set = set(linked_cve_pool)
    unlinked_cves = [c for c in cve_ids if c not in linked_set]
    for position, cve in enumerate(unlinked_cves):
        if position % 5 < 3:
            cve_refs[cve] = [int(cve_only_cwes[position % N_CWES_CVE_ONLY])]

    weaknesses = [
        {
            "cwe_id": int(cwe),
            "name": f"Weakness Category {cwe}",
            "cves": sorted(observed[int(cwe)]),
        }
        for cwe in cwe_ids
    ]

    # ---- write ------------------------------------------------------------
    with open(OUT_DIR / "patterns.jsonl", "w", encoding="utf-8") as fh:
        for record in patterns:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")

    with open(OUT_DIR / "weaknesses.jsonl", "w", encoding="utf-8") as fh:
        for record in weaknesses:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")

    vulns_path = OUT_DIR / "vulns.jsonl.gz"
    with gzip.GzipFile(
        filename="", mode="wb", fileobj=open(vulns_path, "wb"), mtime=0
    ) as fh:
        for cve in cve_ids:
            record = {
                "cve_id": cve,
                "description": cve_description(rng),
                "cwes": cve_refs.get(cve, []),
            }
            fh.write((json.dumps(record, ensure_ascii=False) + "\n").encode())

    # ---- verify the pinned statistics --------------------------------------
    import sys

    sys.path.insert(0, str(ROOT / "src"))
    from vulnbench.corpus import build_linkage, derive_dataset, linkage_stats, load_snapshot

    snapshot = load_snapshot(OUT_DIR)
    graph = build_linkage(
        snapshot.patterns, snapshot.weaknesses, snapshot.vulnerabilities
    )
    rows = linkage_stats(
        graph, snapshot.patterns, snapshot.weaknesses, snapshot.vulnerabilities
    )
    stats = [(r.linked, r.not_linked, r.total) for r in rows]
    expected = [(143, 416, 559), (149, 786, 935), (685, 294919, 295604)]
    assert stats == expected, f"snapshot statistics {stats} != pinned {expected}"
    dataset = derive_dataset(graph, snapshot.patterns)
    labels = {d.label for d in dataset}
    assert len(labels) == 685, len(labels)
    counts = sorted(
        np.unique([d.label for d in dataset], return_counts=True)[1], reverse=True
    )
    assert counts[:6] == sorted(HUB_SIZES, reverse=True), counts[:8]
    print(f"snapshot OK: {len(dataset)} instances, 685 labels, top-6 {counts[:6]}")


if __name__ == "__main__":
    main()
