"""Construction of numerical semigroups and their elementary invariants."""
from __future__ import annotations

import logging
from math import gcd
from typing import Iterable, List, Tuple

import numpy as np

from ..config import get_settings
from ..errors import (
    DegenerateSemigroup,
    EmptyInput,
    IntegerOverflow,
    InternalInconsistency,
    InvalidInput,
    NonCoprime,
    ZeroGenerator,
)
from ..models import AperyPoset, Semigroup
from ..utils.apery import relax_generators

logger = logging.getLogger(__name__)

# 2 * m * max(g) must stay below this so the numpy kernel never leaves int64.
_WIDTH_BUDGET = 1 << 61

NATURALS = Semigroup(generators=(1,), apery_by_residue=(0,))


def construct(raw_generators: Iterable[int]) -> Semigroup:
    """Build the semigroup generated by ``raw_generators``.

    Duplicates and generators representable by the others are dropped, so
    the result always carries the unique minimal system of generators.
    """

    values = list(raw_generators)
    if not values:
        raise EmptyInput("at least one generator is required")
    for value in values:
        if value <= 0:
            raise ZeroGenerator(
                f"generators must be positive integers, got {value}",
                details={"generators": values},
            )
    if gcd(*values) != 1:
        raise NonCoprime(
            f"generators have gcd {gcd(*values)}; they generate no numerical semigroup",
            details={"generators": values, "gcd": gcd(*values)},
        )

    ordered = sorted(set(values))
    multiplicity = ordered[0]
    if 2 * multiplicity * ordered[-1] >= _WIDTH_BUDGET:
        raise IntegerOverflow(
            "Apéry values would exceed the 64-bit working range",
            details={"multiplicity": multiplicity, "largest": ordered[-1]},
        )

    settings = get_settings()
    generators, table = relax_generators(
        ordered, vector_threshold=settings.apery_vector_threshold
    )
    logger.debug("Constructed semigroup %s from %s", generators, values)
    return Semigroup(generators=generators, apery_by_residue=table)


def contains(semigroup: Semigroup, value: int) -> bool:
    return value in semigroup


def frobenius(semigroup: Semigroup) -> int:
    return semigroup.frobenius


def multiplicity(semigroup: Semigroup) -> int:
    return semigroup.multiplicity


def embedding_dimension(semigroup: Semigroup) -> int:
    return semigroup.embedding_dimension


def n_of(semigroup: Semigroup) -> int:
    """Number of elements of S in ``[0, f]``.

    Since ``f`` is never in S this is also ``|{s in S : s < f}|``.
    """

    f = semigroup.frobenius
    m = semigroup.multiplicity
    if m >= get_settings().apery_vector_threshold:
        table = semigroup.residue_array
        below = table[table <= f]
        return int(((f - below) // m + 1).sum())
    return sum((f - w) // m + 1 for w in semigroup.apery_by_residue if w <= f)


def genus(semigroup: Semigroup) -> int:
    return semigroup.frobenius + 1 - n_of(semigroup)


def gaps(semigroup: Semigroup) -> List[int]:
    return [x for x in range(semigroup.frobenius + 1) if x not in semigroup]


def maximal_apery(semigroup: Semigroup) -> Tuple[int, ...]:
    """Maximal elements of ``Ap(S) \\ {0}`` without building the order relation.

    ``w`` is maximal iff ``w + g`` leaves the Apéry set for every generator
    ``g`` other than the multiplicity.
    """

    m = semigroup.multiplicity
    if m == 1:
        return ()
    table = semigroup.apery_by_residue
    others = semigroup.generators[1:]
    if m >= get_settings().apery_vector_threshold:
        values = semigroup.residue_array
        maximal = values > 0
        for generator in others:
            shifted = values + generator
            maximal &= table_lookup(semigroup, shifted) != shifted
        return tuple(sorted(values[maximal].tolist()))
    maximal = [
        w
        for w in table
        if w > 0 and all(table[(w + g) % m] != w + g for g in others)
    ]
    return tuple(sorted(maximal))


def minimal_apery(semigroup: Semigroup) -> Tuple[int, ...]:
    """Minimal elements of ``Ap(S) \\ {0}``: the generators other than the multiplicity."""

    return semigroup.generators[1:]


def table_lookup(semigroup: Semigroup, values: np.ndarray) -> np.ndarray:
    return semigroup.residue_array[values % semigroup.multiplicity]


def type_of(semigroup: Semigroup) -> int:
    return len(maximal_apery(semigroup))


def apery_poset(semigroup: Semigroup) -> AperyPoset:
    """Materialise ``Ap(S) \\ {0}`` ordered by ``u <= w`` iff ``w - u`` is in S."""

    elements = semigroup.apery[1:]
    members = set(elements)
    covers = set()
    for index, upper in enumerate(elements):
        for lower in elements[:index]:
            difference = upper - lower
            if difference in semigroup:
                # w - u in S forces w - u into the Apéry set as well
                if difference not in members:
                    raise InternalInconsistency(
                        "order relation left the Apéry set",
                        details={"lower": lower, "upper": upper, "generators": semigroup.generators},
                    )
                covers.add((lower, upper))
    has_lower = {upper for _, upper in covers}
    has_upper = {lower for lower, _ in covers}
    return AperyPoset(
        elements=elements,
        covers=frozenset(covers),
        min_elements=tuple(w for w in elements if w not in has_lower),
        max_elements=tuple(w for w in elements if w not in has_upper),
    )


def pseudo_frobenius(semigroup: Semigroup) -> List[int]:
    if semigroup.is_natural:
        raise DegenerateSemigroup("N has no pseudo-Frobenius numbers")
    m = semigroup.multiplicity
    return [w - m for w in maximal_apery(semigroup)]


def effective_generators(semigroup: Semigroup) -> Tuple[int, ...]:
    f = semigroup.frobenius
    return tuple(g for g in semigroup.generators if g > f)


def remove_generator(semigroup: Semigroup, generator: int) -> Semigroup:
    """Return ``S \\ {generator}`` for a minimal generator above the Frobenius number."""

    if generator not in semigroup.generators or generator <= semigroup.frobenius:
        raise InvalidInput(
            f"{generator} is not a generator above the Frobenius number",
            details={"generators": semigroup.generators},
        )
    m = semigroup.multiplicity
    if generator == m:
        # S = {0} u [m, oo); dropping m leaves the ordinary semigroup of multiplicity m + 1
        return construct(range(m + 1, 2 * m + 2))

    table = list(semigroup.apery_by_residue)
    table[generator % m] = generator + m
    child_table = tuple(table)

    def is_member(value: int) -> bool:
        return value >= 0 and value >= child_table[value % m]

    kept = [g for g in semigroup.generators if g != generator]
    kept_set = set(kept)
    nonzero = [w for w in child_table if w > 0]
    for other in semigroup.generators:
        candidate = generator + other
        if candidate in kept_set or child_table[candidate % m] != candidate:
            continue
        if not any(u < candidate and is_member(candidate - u) for u in nonzero):
            kept.append(candidate)
            kept_set.add(candidate)
    return Semigroup(generators=tuple(sorted(kept)), apery_by_residue=child_table)
