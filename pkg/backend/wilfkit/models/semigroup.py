"""Domain model for numerical semigroups."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class Semigroup:
    """A numerical semigroup given by its minimal generators and Apéry table.

    ``apery_by_residue[r]`` is the smallest element congruent to ``r`` modulo
    the multiplicity. Instances are built by ``semigroup_service.construct``
    (or derived from a parent by ``remove_generator``) and never mutated;
    equality and hashing use the generators only.
    """

    generators: Tuple[int, ...]
    apery_by_residue: Tuple[int, ...] = field(compare=False, repr=False)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @cached_property
    def apery(self) -> Tuple[int, ...]:
        """Apéry set sorted ascending: ``w_0 < w_1 < ... < w_{m-1}``."""

        return tuple(sorted(self.apery_by_residue))

    @property
    def frobenius(self) -> int:
        return self.apery[-1] - self.multiplicity

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def is_natural(self) -> bool:
        return self.multiplicity == 1

    @cached_property
    def residue_array(self) -> np.ndarray:
        return np.asarray(self.apery_by_residue, dtype=np.int64)

    @cached_property
    def quotients(self) -> np.ndarray:
        """``q[r] = w_r // m``: residue r first belongs to S in interval ``I_{q[r]}``."""

        return self.residue_array // self.multiplicity

    def membership_rows(self, start: int, stop: int) -> np.ndarray:
        """Boolean rows for intervals ``I_start .. I_{stop-1}``; ``rows[k, r]`` is ``(start+k)*m + r in S``.

        One byte per integer; only the interval indices and the quotients are
        held as integers.
        """

        intervals = np.arange(start, stop, dtype=np.int64)
        return intervals[:, None] >= self.quotients[None, :]

    @cached_property
    def small_members(self) -> np.ndarray:
        """Membership table for ``[0, f + m]``; entry ``x`` is true iff ``x`` is in S."""

        size = self.frobenius + self.multiplicity + 1
        rows = -(-size // self.multiplicity)
        table = self.membership_rows(0, rows).reshape(-1)[:size]
        table.setflags(write=False)
        return table

    def __contains__(self, value: int) -> bool:
        return value >= 0 and value >= self.apery_by_residue[value % self.generators[0]]
