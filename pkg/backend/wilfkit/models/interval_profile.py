"""Domain models for the interval decomposition and the Wilf report."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True, slots=True)
class IntervalProfile:
    """Counts of semigroup elements in the intervals ``I_k = [km, (k+1)m - 1]``.

    ``f + 1 = L*m + rho`` with ``1 <= rho <= m``. ``n_k[k]`` counts members of
    ``I_k`` below the Frobenius number, while ``last_interval_members`` counts
    every member of ``I_L``. ``eta`` and ``epsilon`` are dense, position
    ``j - 1`` holding the value for ``j = 1..m-1``.
    """

    multiplicity: int
    L: int
    rho: int
    n_k: Tuple[int, ...]
    last_interval_members: int
    eta: Tuple[int, ...]
    epsilon: Tuple[int, ...]

    @property
    def n_last(self) -> int:
        return self.n_k[self.L]

    def eta_at(self, j: int) -> int:
        return self.eta[j - 1]

    def epsilon_at(self, j: int) -> int:
        return self.epsilon[j - 1]


@dataclass(frozen=True, slots=True)
class WilfReport:
    """Wilf's inequality ``f + 1 <= n(S) * nu`` evaluated three ways."""

    wilf_lhs: int
    wilf_rhs: int
    slack_direct: int
    slack_interval: int
    slack_epsilon: int

    @property
    def satisfied(self) -> bool:
        return self.slack_direct >= 0

    @property
    def slack(self) -> int:
        return self.slack_direct
