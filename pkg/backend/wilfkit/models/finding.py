"""Domain models for lemma checks and generalized arithmetic sequences."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple


class LemmaId(str, Enum):
    MINMAX = "MINMAX"
    CLOSURE = "CLOSURE"
    TYPE_BOUND = "TYPE_BOUND"
    FRAG = "FRAG"
    UNFOR = "UNFOR"
    TEN = "TEN"
    SILENCE = "SILENCE"
    SHEEP = "SHEEP"
    MAS = "MAS"
    NOK = "NOK"
    MAKE = "MAKE"
    BOX = "BOX"
    MOS = "MOS"
    GOD = "GOD"
    GOD_BOUND = "GOD_BOUND"
    FAIL = "FAIL"
    GENER = "GENER"


@dataclass(frozen=True, slots=True)
class LemmaFinding:
    """Outcome of one hypothesis => conclusion check on one semigroup."""

    lemma_id: LemmaId
    generators: Tuple[int, ...]
    hypothesis_met: bool
    conclusion_met: bool
    detail: Optional[str] = None

    @property
    def is_counterexample(self) -> bool:
        return self.hypothesis_met and not self.conclusion_met


@dataclass(frozen=True, slots=True)
class GasSpec:
    """Parameters of ``<m, hm + d, hm + 2d, ..., hm + ld>``."""

    m: int
    h: int
    d: int
    l: int  # noqa: E741

    @property
    def generators(self) -> Tuple[int, ...]:
        base = self.h * self.m
        return (self.m,) + tuple(base + i * self.d for i in range(1, self.l + 1))


@dataclass(frozen=True, slots=True)
class GasEvaluation:
    """Computed versus predicted type for one generalized arithmetic sequence."""

    spec: GasSpec
    generators: Tuple[int, ...]
    t_computed: int
    t_formula: int
    slack: int

    @property
    def nu(self) -> int:
        return len(self.generators)

    @property
    def match(self) -> bool:
        return self.t_computed == self.t_formula

    @property
    def satisfied(self) -> bool:
        return self.slack >= 0
