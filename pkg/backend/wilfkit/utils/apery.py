"""Round-robin shortest-distance relaxation on the residue graph modulo m.

The residue graph has one node per residue class r of Z/mZ and an edge
r -> (r + g) mod m of weight g for every generator g. The shortest distance
from 0 to r is the smallest element of the semigroup congruent to r, so the
distance table indexed by residue is exactly the Apéry set of the semigroup
with respect to m.

Generators are processed one at a time. Adding generator g only relaxes
along the cycles of the permutation r -> r + g, and walking each cycle once
starting from its minimum is enough to reach the fixpoint for the
sub-semigroup generated so far. Redundant generators are detected for free:
after the smaller generators have been processed, g is redundant exactly
when ``table[g % m] <= g``.
"""
from __future__ import annotations

import logging
from math import gcd
from typing import List, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

# Distances never reach this value once the generators are coprime.
UNREACHED = 1 << 62


def _relax_cycles_python(table: List[int], step: int) -> None:
    m = len(table)
    cycles = gcd(step, m)
    length = m // cycles
    for start in range(cycles):
        # locate the cycle minimum; it cannot be improved by this generator
        best_residue = start
        best_value = table[start]
        residue = start
        for _ in range(length - 1):
            residue = (residue + step) % m
            value = table[residue]
            if value < best_value:
                best_value = value
                best_residue = residue
        if best_value >= UNREACHED:
            continue
        residue = best_residue
        current = best_value
        for _ in range(length - 1):
            residue = (residue + step) % m
            candidate = current + step
            if candidate < table[residue]:
                table[residue] = candidate
                current = candidate
            else:
                current = table[residue]


def _relax_cycles_numpy(table: np.ndarray, step: int) -> None:
    m = table.shape[0]
    cycles = gcd(step, m)
    length = m // cycles
    # walk every cycle twice so a prefix minimum sees all predecessors
    offsets = np.arange(2 * length, dtype=np.int64)
    starts = np.arange(cycles, dtype=np.int64)[:, None]
    residues = (starts + offsets[None, :] * (step % m)) % m
    weights = offsets * step
    shifted = table[residues] - weights
    best = np.minimum.accumulate(shifted, axis=1) + weights
    tail = residues[:, length:]
    table[tail] = np.minimum(table[tail], best[:, length:])


def relax_generators(
    generators: Sequence[int],
    *,
    vector_threshold: int = 512,
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Return ``(minimal_generators, apery_by_residue)`` for sorted coprime generators.

    ``generators`` must be sorted ascending, positive and duplicate-free; the
    first entry is the multiplicity.
    """

    multiplicity = generators[0]
    kept = [multiplicity]
    if multiplicity == 1:
        return (1,), (0,)

    use_numpy = multiplicity >= vector_threshold
    if use_numpy:
        table_np = np.full(multiplicity, UNREACHED, dtype=np.int64)
        table_np[0] = 0
    else:
        table_py = [UNREACHED] * multiplicity
        table_py[0] = 0

    for generator in generators[1:]:
        residue = generator % multiplicity
        current = int(table_np[residue]) if use_numpy else table_py[residue]
        if current <= generator:
            logger.debug("Generator %s is redundant", generator)
            continue
        kept.append(generator)
        if use_numpy:
            _relax_cycles_numpy(table_np, generator)
        else:
            _relax_cycles_python(table_py, generator)

    table = table_np.tolist() if use_numpy else table_py
    return tuple(kept), tuple(table)
