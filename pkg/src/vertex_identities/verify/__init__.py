"""Identity registry and exact verification engine."""

from .engine import (
    SCHEMA_VERSION,
    Report,
    get_spec,
    list_identities,
    report_line,
    reports_to_csv,
    reports_to_json,
    verify_identity,
    verify_pfaffian_cauchy_binet,
)
from .identities import REGISTRY, IdentitySpec

__all__ = [
    "REGISTRY",
    "IdentitySpec",
    "Report",
    "SCHEMA_VERSION",
    "get_spec",
    "list_identities",
    "report_line",
    "reports_to_csv",
    "reports_to_json",
    "verify_identity",
    "verify_pfaffian_cauchy_binet",
]
