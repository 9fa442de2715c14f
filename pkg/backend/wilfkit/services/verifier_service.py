"""Executable hypothesis => conclusion checks of partial results on Wilf's conjecture.

Each checker returns a :class:`LemmaFinding`. A vacuous hypothesis is
reported as ``hypothesis_met=False`` instead of being skipped so coverage
statistics show how much of a universe each statement touches. Checkers
stated for semigroups other than N report ``hypothesis_met=False`` on N.
"""
from __future__ import annotations

import logging
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from ..errors import InvalidInput
from ..models import IntervalProfile, LemmaFinding, LemmaId, Semigroup, WilfReport
from . import profile_service, semigroup_service

logger = logging.getLogger(__name__)


class SemigroupFacts:
    """Invariants of one semigroup, computed on first use and shared by checkers."""

    def __init__(self, semigroup: Semigroup) -> None:
        self.semigroup = semigroup

    @property
    def m(self) -> int:
        return self.semigroup.multiplicity

    @property
    def nu(self) -> int:
        return self.semigroup.embedding_dimension

    @property
    def f(self) -> int:
        return self.semigroup.frobenius

    @property
    def apery(self):
        return self.semigroup.apery

    @cached_property
    def report(self) -> WilfReport:
        return profile_service.wilf_report(self.semigroup)

    @cached_property
    def profile(self) -> IntervalProfile:
        return profile_service.interval_profile(self.semigroup)

    @cached_property
    def type(self) -> int:
        return semigroup_service.type_of(self.semigroup)

    @cached_property
    def n(self) -> int:
        return semigroup_service.n_of(self.semigroup)


def _finding(
    lemma_id: LemmaId,
    facts: SemigroupFacts,
    hypothesis: bool,
    conclusion: Callable[[], bool] | bool,
    detail: Optional[str] = None,
) -> LemmaFinding:
    # conclusions are only evaluated under their hypothesis
    met = (conclusion() if callable(conclusion) else conclusion) if hypothesis else True
    finding = LemmaFinding(
        lemma_id=lemma_id,
        generators=facts.semigroup.generators,
        hypothesis_met=hypothesis,
        conclusion_met=met,
        detail=detail,
    )
    if finding.is_counterexample:
        logger.warning("Counterexample to %s: %s", lemma_id.value, facts.semigroup.generators)
    return finding


def _unfor(facts: SemigroupFacts) -> LemmaFinding:
    hypothesis = not facts.semigroup.is_natural and facts.m - facts.nu <= 2
    return _finding(
        LemmaId.UNFOR,
        facts,
        hypothesis,
        lambda: facts.type + 1 <= facts.nu and facts.report.satisfied,
    )


def _ten(facts: SemigroupFacts) -> LemmaFinding:
    return _finding(
        LemmaId.TEN,
        facts,
        facts.m <= 6,
        lambda: (facts.nu <= 3 or facts.m - facts.nu <= 2) and facts.report.satisfied,
    )


def _frag(facts: SemigroupFacts) -> LemmaFinding:
    return _finding(LemmaId.FRAG, facts, facts.nu <= 3, lambda: facts.report.satisfied)


def _nok(facts: SemigroupFacts) -> LemmaFinding:
    hypothesis = not facts.semigroup.is_natural and facts.m - facts.nu >= 2

    def conclusion() -> bool:
        w, m = facts.apery, facts.m
        return w[facts.nu + 1] // m >= w[1] // m + w[2] // m

    return _finding(LemmaId.NOK, facts, hypothesis, conclusion)


def _make(facts: SemigroupFacts) -> LemmaFinding:
    hypothesis = False
    if not facts.semigroup.is_natural and facts.m - facts.nu >= 2:
        w, m = facts.apery, facts.m
        hypothesis = w[m - 1] // m == w[1] // m + w[2] // m
    return _finding(LemmaId.MAKE, facts, hypothesis, lambda: facts.profile.n_last >= 3)


def _box(facts: SemigroupFacts) -> LemmaFinding:
    hypothesis = not facts.semigroup.is_natural and facts.m - facts.nu >= 3
    return _finding(LemmaId.BOX, facts, hypothesis, lambda: facts.apery[2] < facts.f)


def _mos(facts: SemigroupFacts) -> LemmaFinding:
    hypothesis = (
        not facts.semigroup.is_natural
        and facts.m - facts.nu >= 3
        and facts.profile.n_last == 1
    )

    def conclusion() -> bool:
        profile = facts.profile
        if profile.L < 1:
            return False
        before_last = profile.n_k[profile.L - 1]
        if before_last == 3 and not facts.apery[3] > facts.f:
            return False
        return before_last >= 4 or (
            before_last == 3 and facts.m - facts.nu == 3 and profile.rho <= facts.m - 2
        )

    return _finding(LemmaId.MOS, facts, hypothesis, conclusion)


def _god(facts: SemigroupFacts) -> LemmaFinding:
    return _finding(LemmaId.GOD, facts, 2 * facts.nu >= facts.m, lambda: facts.report.satisfied)


def _god_bound(facts: SemigroupFacts) -> LemmaFinding:
    hypothesis = facts.m >= 3 and 2 * facts.nu >= facts.m
    return _finding(
        LemmaId.GOD_BOUND,
        facts,
        hypothesis,
        lambda: facts.report.slack_interval
        >= profile_service.god_lower_bound(facts.semigroup, facts.profile),
    )


def _fail(facts: SemigroupFacts) -> LemmaFinding:
    return _finding(
        LemmaId.FAIL,
        facts,
        facts.m <= 8,
        lambda: facts.report.satisfied and (facts.nu <= 3 or 2 * facts.nu >= facts.m),
    )


def _type_bound(facts: SemigroupFacts) -> LemmaFinding:
    return _finding(
        LemmaId.TYPE_BOUND,
        facts,
        not facts.semigroup.is_natural,
        lambda: profile_service.type_bound_check(facts.semigroup),
    )


def pseudo_frobenius_by_definition(semigroup: Semigroup) -> List[int]:
    """Gaps ``x`` with ``x + g`` in S for every generator ``g``."""

    return [
        x
        for x in range(semigroup.frobenius + 1)
        if x not in semigroup and all(x + g in semigroup for g in semigroup.generators)
    ]


def _minmax(facts: SemigroupFacts) -> LemmaFinding:
    def conclusion() -> bool:
        semigroup = facts.semigroup
        poset = semigroup_service.apery_poset(semigroup)
        shifted = [w - facts.m for w in poset.max_elements]
        return (
            poset.min_elements == semigroup_service.minimal_apery(semigroup)
            and shifted == pseudo_frobenius_by_definition(semigroup)
            and poset.max_elements == semigroup_service.maximal_apery(semigroup)
        )

    return _finding(LemmaId.MINMAX, facts, not facts.semigroup.is_natural, conclusion)


def _closure(facts: SemigroupFacts) -> LemmaFinding:
    def conclusion() -> bool:
        semigroup = facts.semigroup
        members = set(semigroup.apery)
        return all(
            upper - lower in members
            for lower in semigroup.apery[1:]
            for upper in semigroup.apery[1:]
            if upper > lower and (upper - lower) in semigroup
        )

    return _finding(LemmaId.CLOSURE, facts, not facts.semigroup.is_natural, conclusion)


def _silence(facts: SemigroupFacts) -> LemmaFinding:
    def conclusion() -> bool:
        profile = facts.profile
        full = profile.n_k[: profile.L]
        in_range = all(1 <= count <= facts.m - 1 for count in profile.n_k)
        monotone = all(a <= b for a, b in zip(full, full[1:]))
        return in_range and monotone and sum(profile.n_k) == facts.n

    return _finding(LemmaId.SILENCE, facts, not facts.semigroup.is_natural, conclusion)


def _sheep(facts: SemigroupFacts) -> LemmaFinding:
    def conclusion() -> bool:
        profile = facts.profile
        direct = profile_service.eta_direct(facts.semigroup)
        return all(
            epsilon == (eta - 1 if j == profile.last_interval_members else eta)
            for j, (eta, epsilon) in enumerate(zip(direct, profile.epsilon), start=1)
        )

    return _finding(LemmaId.SHEEP, facts, not facts.semigroup.is_natural, conclusion)


def _mas(facts: SemigroupFacts) -> LemmaFinding:
    def conclusion() -> bool:
        direct = profile_service.eta_direct(facts.semigroup)
        return list(facts.profile.eta) == direct and sum(direct) == facts.profile.L + 1

    return _finding(LemmaId.MAS, facts, not facts.semigroup.is_natural, conclusion)


_CHECKERS: Dict[LemmaId, Callable[[SemigroupFacts], LemmaFinding]] = {
    LemmaId.MINMAX: _minmax,
    LemmaId.CLOSURE: _closure,
    LemmaId.TYPE_BOUND: _type_bound,
    LemmaId.FRAG: _frag,
    LemmaId.UNFOR: _unfor,
    LemmaId.TEN: _ten,
    LemmaId.SILENCE: _silence,
    LemmaId.SHEEP: _sheep,
    LemmaId.MAS: _mas,
    LemmaId.NOK: _nok,
    LemmaId.MAKE: _make,
    LemmaId.BOX: _box,
    LemmaId.MOS: _mos,
    LemmaId.GOD: _god,
    LemmaId.GOD_BOUND: _god_bound,
    LemmaId.FAIL: _fail,
}

SEMIGROUP_CHECKERS = tuple(_CHECKERS)


def check_unfor(semigroup: Semigroup) -> LemmaFinding:
    return _unfor(SemigroupFacts(semigroup))


def check_ten(semigroup: Semigroup) -> LemmaFinding:
    return _ten(SemigroupFacts(semigroup))


def check_frag(semigroup: Semigroup) -> LemmaFinding:
    return _frag(SemigroupFacts(semigroup))


def check_nok(semigroup: Semigroup) -> LemmaFinding:
    return _nok(SemigroupFacts(semigroup))


def check_make(semigroup: Semigroup) -> LemmaFinding:
    return _make(SemigroupFacts(semigroup))


def check_box(semigroup: Semigroup) -> LemmaFinding:
    return _box(SemigroupFacts(semigroup))


def check_mos(semigroup: Semigroup) -> LemmaFinding:
    return _mos(SemigroupFacts(semigroup))


def check_god(semigroup: Semigroup) -> LemmaFinding:
    return _god(SemigroupFacts(semigroup))


def check_god_bound(semigroup: Semigroup) -> LemmaFinding:
    return _god_bound(SemigroupFacts(semigroup))


def check_small_multiplicity(semigroup: Semigroup) -> LemmaFinding:
    return _fail(SemigroupFacts(semigroup))


def check_type_bound(semigroup: Semigroup) -> LemmaFinding:
    return _type_bound(SemigroupFacts(semigroup))


def check_minmax(semigroup: Semigroup) -> LemmaFinding:
    return _minmax(SemigroupFacts(semigroup))


def check_closure(semigroup: Semigroup) -> LemmaFinding:
    return _closure(SemigroupFacts(semigroup))


def check_silence(semigroup: Semigroup) -> LemmaFinding:
    return _silence(SemigroupFacts(semigroup))


def check_sheep(semigroup: Semigroup) -> LemmaFinding:
    return _sheep(SemigroupFacts(semigroup))


def check_mas(semigroup: Semigroup) -> LemmaFinding:
    return _mas(SemigroupFacts(semigroup))


def resolve_checkers(names: Iterable[str | LemmaId]) -> List[LemmaId]:
    """Map user tags (``"god"``, ``"ALL"``) to checker ids; GENER is run by the gas service."""

    selected: List[LemmaId] = []
    for name in names:
        tag = name.value if isinstance(name, LemmaId) else str(name).strip().upper()
        if tag == "ALL":
            return list(SEMIGROUP_CHECKERS)
        try:
            lemma_id = LemmaId(tag)
        except ValueError as exc:
            raise InvalidInput(
                f"unknown checker {name!r}",
                details={"known": [item.value for item in SEMIGROUP_CHECKERS]},
            ) from exc
        if lemma_id not in _CHECKERS:
            raise InvalidInput(f"{tag} is checked over generalized arithmetic sequences, not semigroups")
        if lemma_id not in selected:
            selected.append(lemma_id)
    return selected or list(SEMIGROUP_CHECKERS)


def run_checkers(semigroup: Semigroup, lemma_ids: Sequence[LemmaId]) -> List[LemmaFinding]:
    facts = SemigroupFacts(semigroup)
    return [_CHECKERS[lemma_id](facts) for lemma_id in lemma_ids]


class CheckerVisitor:
    """Picklable enumeration visitor applying a fixed checker selection."""

    def __init__(self, lemma_ids: Sequence[LemmaId]) -> None:
        self.lemma_ids = tuple(lemma_ids)

    def __call__(self, semigroup: Semigroup) -> List[LemmaFinding]:
        return run_checkers(semigroup, self.lemma_ids)
