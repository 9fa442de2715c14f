"""Domain models for semigroup-tree traversal and its aggregated outcome."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .finding import LemmaFinding, LemmaId
from .semigroup import Semigroup


@dataclass(frozen=True, slots=True)
class TreeNode:
    """A node of the semigroup tree; ``depth`` equals the genus."""

    semigroup: Semigroup
    effective_generators: Tuple[int, ...]
    depth: int


@dataclass(slots=True)
class CheckerStats:
    checked: int = 0
    hypothesis_met: int = 0
    counterexamples: List[LemmaFinding] = field(default_factory=list)

    def record(self, finding: LemmaFinding) -> None:
        self.checked += 1
        if finding.hypothesis_met:
            self.hypothesis_met += 1
        if finding.is_counterexample:
            self.counterexamples.append(finding)

    def merge(self, other: "CheckerStats") -> None:
        self.checked += other.checked
        self.hypothesis_met += other.hypothesis_met
        self.counterexamples.extend(other.counterexamples)


def _witness_key(slack: int, genus: int, generators: Tuple[int, ...]) -> Tuple[int, int, Tuple[int, ...]]:
    return (slack, genus, generators)


@dataclass(slots=True)
class VerificationSummary:
    """Aggregate of an enumeration run.

    Merging is associative and commutative: counts add up, counterexample
    lists are kept sorted, and the minimum-slack witness is chosen by
    ``(slack, genus, generators)`` so any schedule produces the same summary.
    """

    genus_counts: List[int] = field(default_factory=list)
    checker_stats: Dict[LemmaId, CheckerStats] = field(default_factory=dict)
    wilf_min_slack: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None
    witness_genus: Optional[int] = None
    nodes_visited: int = 0
    visited: int = 0

    @property
    def total(self) -> int:
        return sum(self.genus_counts)

    @property
    def counterexamples(self) -> List[LemmaFinding]:
        found = [item for stats in self.checker_stats.values() for item in stats.counterexamples]
        return sorted(found, key=lambda item: (item.lemma_id.value, len(item.generators), item.generators))

    def count_node(self, genus: int) -> None:
        while len(self.genus_counts) <= genus:
            self.genus_counts.append(0)
        self.genus_counts[genus] += 1
        self.nodes_visited += 1

    def observe_slack(self, slack: int, genus: int, generators: Tuple[int, ...]) -> None:
        if self.wilf_min_slack is None or _witness_key(slack, genus, generators) < _witness_key(
            self.wilf_min_slack, self.witness_genus, self.witness  # type: ignore[arg-type]
        ):
            self.wilf_min_slack = slack
            self.witness = generators
            self.witness_genus = genus

    def record(self, finding: LemmaFinding) -> None:
        self.checker_stats.setdefault(finding.lemma_id, CheckerStats()).record(finding)

    def merge(self, other: "VerificationSummary") -> "VerificationSummary":
        for genus, count in enumerate(other.genus_counts):
            while len(self.genus_counts) <= genus:
                self.genus_counts.append(0)
            self.genus_counts[genus] += count
        for lemma_id, stats in other.checker_stats.items():
            self.checker_stats.setdefault(lemma_id, CheckerStats()).merge(stats)
        if other.wilf_min_slack is not None:
            self.observe_slack(other.wilf_min_slack, other.witness_genus, other.witness)  # type: ignore[arg-type]
        self.nodes_visited += other.nodes_visited
        self.visited += other.visited
        return self
