"""Frozen dataclasses representing the toolkit's domain values."""

from .semigroup import Semigroup
from .apery_poset import AperyPoset
from .interval_profile import IntervalProfile, WilfReport
from .finding import GasEvaluation, GasSpec, LemmaFinding, LemmaId
from .tree import CheckerStats, TreeNode, VerificationSummary

__all__ = [
    "Semigroup",
    "AperyPoset",
    "IntervalProfile",
    "WilfReport",
    "GasEvaluation",
    "GasSpec",
    "LemmaFinding",
    "LemmaId",
    "CheckerStats",
    "TreeNode",
    "VerificationSummary",
]
