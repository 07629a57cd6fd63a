"""vulnbench: benchmark toolkit mapping textual attack patterns to CVE vulnerabilities."""

__version__ = "0.1.0"
