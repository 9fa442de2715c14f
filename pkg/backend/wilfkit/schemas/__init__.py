"""Pydantic schemas for machine-readable output and run configuration."""

from .response import ErrorResponse
from .semigroup_schema import InvariantsRecord, ProfileRecord, WilfRecord
from .verification_schema import CheckerStatsRecord, FindingRecord, GasRecord, SummaryRecord
from .run_config import GasRanges, RunConfig

__all__ = [
    "ErrorResponse",
    "InvariantsRecord",
    "ProfileRecord",
    "WilfRecord",
    "CheckerStatsRecord",
    "FindingRecord",
    "GasRecord",
    "SummaryRecord",
    "GasRanges",
    "RunConfig",
]
