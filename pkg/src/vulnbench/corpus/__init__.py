"""Feed parsing, linkage graph construction, and dataset derivation."""

from .capec import CapecParseResult, parse_capec
from .cwe import CweParseResult, parse_cwe
from .errors import FeedParseError, UnsupportedSchemaError
from .linkage import (
    LinkageGraph,
    RepositoryStats,
    build_linkage,
    derive_dataset,
    format_stats,
    linkage_stats,
)
from .nvd import CveParseResult, parse_cve_feed, parse_cve_feed_directory
from .records import (
    AttackPatternRecord,
    LabeledDocument,
    VulnerabilityRecord,
    WeaknessRecord,
    is_valid_cve_id,
)
from .snapshot import Snapshot, load_snapshot, read_dataset, write_dataset

__all__ = [
    "AttackPatternRecord",
    "CapecParseResult",
    "CveParseResult",
    "CweParseResult",
    "FeedParseError",
    "LabeledDocument",
    "LinkageGraph",
    "RepositoryStats",
    "Snapshot",
    "UnsupportedSchemaError",
    "VulnerabilityRecord",
    "WeaknessRecord",
    "build_linkage",
    "derive_dataset",
    "format_stats",
    "is_valid_cve_id",
    "linkage_stats",
    "load_snapshot",
    "parse_capec",
    "parse_cve_feed",
    "parse_cve_feed_directory",
    "parse_cwe",
    "read_dataset",
    "write_dataset",
]
