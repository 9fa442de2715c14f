"""Records emitted by enumeration-backed verification runs."""
from __future__ import annotations

from datetime import datetime, timezone
from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from ..models import GasEvaluation, LemmaFinding, VerificationSummary


class FindingRecord(BaseModel):
    record: Literal["counterexample"] = "counterexample"
    lemma_id: str
    gens: List[int]
    hypothesis_met: bool
    conclusion_met: bool
    detail: Optional[str] = None

    @classmethod
    def build(cls, finding: LemmaFinding) -> "FindingRecord":
        return cls(
            lemma_id=finding.lemma_id.value,
            gens=list(finding.generators),
            hypothesis_met=finding.hypothesis_met,
            conclusion_met=finding.conclusion_met,
            detail=finding.detail,
        )


class CheckerStatsRecord(BaseModel):
    lemma_id: str
    checked: int
    hypothesis_met: int
    counterexamples: int


class SummaryRecord(BaseModel):
    record: Literal["summary"] = "summary"
    max_genus: int
    filter: str
    checkers: List[str]
    genus_counts: List[int]
    total: int
    visited: int
    checker_stats: List[CheckerStatsRecord]
    counterexamples: int
    min_slack: Optional[int]
    witness: Optional[List[int]]
    timestamp: str = Field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    @classmethod
    def build(
        cls,
        summary: VerificationSummary,
        *,
        max_genus: int,
        filter_name: str,
        checkers: List[str],
    ) -> "SummaryRecord":
        stats = [
            CheckerStatsRecord(
                lemma_id=lemma_id,
                checked=summary.checker_stats[key].checked,
                hypothesis_met=summary.checker_stats[key].hypothesis_met,
                counterexamples=len(summary.checker_stats[key].counterexamples),
            )
            for lemma_id, key in sorted(
                (key.value, key) for key in summary.checker_stats
            )
        ]
        return cls(
            max_genus=max_genus,
            filter=filter_name,
            checkers=checkers,
            genus_counts=list(summary.genus_counts),
            total=summary.total,
            visited=summary.visited,
            checker_stats=stats,
            counterexamples=len(summary.counterexamples),
            min_slack=summary.wilf_min_slack,
            witness=list(summary.witness) if summary.witness is not None else None,
        )


class GasRecord(BaseModel):
    record: Literal["gas"] = "gas"
    m: int
    h: int
    d: int
    l: int  # noqa: E741
    gens: List[int]
    nu: int
    t_computed: int
    t_formula: int
    match: bool
    slack: int
    satisfied: bool

    @classmethod
    def build(cls, evaluation: GasEvaluation) -> "GasRecord":
        spec = evaluation.spec
        return cls(
            m=spec.m,
            h=spec.h,
            d=spec.d,
            l=spec.l,
            gens=list(evaluation.generators),
            nu=evaluation.nu,
            t_computed=evaluation.t_computed,
            t_formula=evaluation.t_formula,
            match=evaluation.match,
            slack=evaluation.slack,
            satisfied=evaluation.satisfied,
        )
