"""Domain model for the Apéry set ordered by the semigroup."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Tuple


@dataclass(frozen=True, slots=True)
class AperyPoset:
    """``Ap(S) \\ {0}`` with ``u <= w`` iff ``w - u`` is in S.

    ``covers`` holds the full relation (every comparable pair with ``u != w``),
    not its transitive reduction.
    """

    elements: Tuple[int, ...]
    covers: FrozenSet[Tuple[int, int]]
    min_elements: Tuple[int, ...]
    max_elements: Tuple[int, ...]

    @property
    def type(self) -> int:
        return len(self.max_elements)
