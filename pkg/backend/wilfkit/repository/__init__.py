"""Repository layer exports."""

from . import report_repository
from .report_repository import ReportRepository

__all__ = [
    "report_repository",
    "ReportRepository",
]
