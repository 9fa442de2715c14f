"""Semigroups generated by generalized arithmetic sequences ``<m, hm+d, ..., hm+ld>``."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from math import gcd
from typing import Iterable, Iterator, Optional, Tuple

from ..errors import InternalInconsistency, InvalidGasSpec
from ..models import GasEvaluation, GasSpec, LemmaFinding, LemmaId, Semigroup
from . import profile_service, semigroup_service

logger = logging.getLogger(__name__)

Range = Tuple[int, int]


def validate_gas_spec(spec: GasSpec) -> GasSpec:
    if spec.m < 2:
        raise InvalidGasSpec(f"m must be at least 2, got {spec.m}", details={"m": spec.m})
    if spec.h < 1 or spec.d < 1:
        raise InvalidGasSpec("h and d must be positive", details={"h": spec.h, "d": spec.d})
    if gcd(spec.m, spec.d) != 1:
        raise InvalidGasSpec(
            f"gcd(m, d) = {gcd(spec.m, spec.d)}; m and d must be coprime",
            details={"m": spec.m, "d": spec.d},
        )
    if not 1 <= spec.l <= spec.m - 2:
        raise InvalidGasSpec(
            f"l must lie in [1, {spec.m - 2}], got {spec.l}",
            details={"m": spec.m, "l": spec.l},
        )
    return spec


def gas_construct(spec: GasSpec) -> Semigroup:
    validate_gas_spec(spec)
    semigroup = semigroup_service.construct(spec.generators)
    if semigroup.generators != spec.generators:
        raise InternalInconsistency(
            "generalized arithmetic sequence is not a minimal system",
            details={"expected": spec.generators, "got": semigroup.generators},
        )
    return semigroup


def type_formula(spec: GasSpec) -> int:
    """Closed-form type ``m - floor((m-2)/l) * l - 1``."""

    return spec.m - ((spec.m - 2) // spec.l) * spec.l - 1


def evaluate_gas(spec: GasSpec) -> GasEvaluation:
    semigroup = gas_construct(spec)
    return GasEvaluation(
        spec=spec,
        generators=semigroup.generators,
        t_computed=semigroup_service.type_of(semigroup),
        t_formula=type_formula(spec),
        slack=profile_service.wilf_slack(semigroup),
    )


def check_gener(spec: GasSpec) -> LemmaFinding:
    evaluation = evaluate_gas(spec)
    conclusion = evaluation.match and evaluation.t_computed < evaluation.nu and evaluation.satisfied
    if not conclusion:
        logger.warning("Counterexample to GENER: %s", spec)
    return LemmaFinding(
        lemma_id=LemmaId.GENER,
        generators=evaluation.generators,
        hypothesis_met=True,
        conclusion_met=conclusion,
        detail=f"t_computed={evaluation.t_computed} t_formula={evaluation.t_formula}",
    )


def gas_grid(
    m_range: Range,
    h_range: Range,
    d_range: Optional[Range] = None,
    l_range: Optional[Range] = None,
) -> Iterator[GasSpec]:
    """Yield every valid spec in the grid, in lexicographic ``(m, h, d, l)`` order.

    ``d`` defaults to ``1..2m`` and ``l`` to ``1..m-2``. Invalid combinations
    are skipped, except when the offending parameters are pinned to single
    values, which raises :class:`InvalidGasSpec`.
    """

    if m_range[0] < 2 or h_range[0] < 1:
        raise InvalidGasSpec("m must be at least 2 and h at least 1")
    if m_range[0] == m_range[1]:
        m = m_range[0]
        if d_range is not None and d_range[0] == d_range[1] and gcd(m, d_range[0]) != 1:
            raise InvalidGasSpec(
                f"gcd(m, d) = {gcd(m, d_range[0])}; m and d must be coprime",
                details={"m": m, "d": d_range[0]},
            )
        if l_range is not None and l_range[0] == l_range[1] and not 1 <= l_range[0] <= m - 2:
            raise InvalidGasSpec(
                f"l must lie in [1, {m - 2}], got {l_range[0]}",
                details={"m": m, "l": l_range[0]},
            )
        l_low, l_high = l_range if l_range is not None else (1, m - 2)
        if max(l_low, 1) > min(l_high, m - 2):
            raise InvalidGasSpec(
                f"no l in [1, {m - 2}] for m = {m}",
                details={"m": m, "l": list(l_range) if l_range is not None else None},
            )

    for m in range(m_range[0], m_range[1] + 1):
        d_low, d_high = d_range if d_range is not None else (1, 2 * m)
        l_low, l_high = l_range if l_range is not None else (1, m - 2)
        for h in range(h_range[0], h_range[1] + 1):
            for d in range(max(d_low, 1), d_high + 1):
                if gcd(m, d) != 1:
                    continue
                for l in range(max(l_low, 1), min(l_high, m - 2) + 1):  # noqa: E741
                    yield GasSpec(m=m, h=h, d=d, l=l)


def evaluate_grid(specs: Iterable[GasSpec], *, jobs: int = 1) -> Iterator[GasEvaluation]:
    """Evaluate specs in order, fanning out to worker processes when ``jobs > 1``."""

    if jobs <= 1:
        for spec in specs:
            yield evaluate_gas(spec)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(evaluate_gas, specs, chunksize=64)
