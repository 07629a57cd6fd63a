"""Shared fixtures: the bundled snapshot and its derived dataset."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from vulnbench.corpus import build_linkage, derive_dataset, linkage_stats, load_snapshot

from paths import SNAPSHOT_DIR


@pytest.fixture(scope="session")
def snapshot():
    return load_snapshot(SNAPSHOT_DIR)


@pytest.fixture(scope="session")
def snapshot_graph(snapshot):
    return build_linkage(
        snapshot.patterns, snapshot.weaknesses, snapshot.vulnerabilities
    )


@pytest.fixture(scope="session")
def snapshot_stats(snapshot, snapshot_graph):
    return linkage_stats(
        snapshot_graph, snapshot.patterns, snapshot.weaknesses, snapshot.vulnerabilities
    )


@pytest.fixture(scope="session")
def snapshot_dataset(snapshot, snapshot_graph):
    return derive_dataset(snapshot_graph, snapshot.patterns)
