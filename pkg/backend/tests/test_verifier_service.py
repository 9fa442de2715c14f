from __future__ import annotations

import pytest

from wilfkit.errors import InvalidInput
from wilfkit.models import LemmaFinding, LemmaId
from wilfkit.services import enumeration_service, semigroup_service, verifier_service


def _check(name, generators):
    finding = getattr(verifier_service, f"check_{name}")(semigroup_service.construct(generators))
    return finding.hypothesis_met, finding.conclusion_met


@pytest.mark.parametrize(
    "name, generators, hypothesis, conclusion",
    [
        ("unfor", [7, 8, 10, 19], False, True),
        ("unfor", [4, 5, 6, 7], True, True),
        ("unfor", [2, 3], True, True),
        ("nok", [7, 8, 10, 19], True, True),
        ("nok", [2, 3], False, True),
        ("nok", [5, 7, 9], True, True),
        ("make", [5, 7, 9], False, True),
        ("make", [7, 8, 10, 19], True, True),
        ("make", [2, 3], False, True),
        ("box", [7, 8, 10, 19], True, True),
        ("box", [2, 3], False, True),
        ("box", [6, 7, 11], True, True),
        ("mos", [7, 8, 10, 19], False, True),
        ("mos", [2, 3], False, True),
        ("god", [7, 8, 10, 19], True, True),
        ("god", [1], True, True),
        ("god", [9, 10, 11], False, True),
        ("god_bound", [7, 8, 10, 19], True, True),
        ("small_multiplicity", [7, 8, 10, 19], True, True),
        ("small_multiplicity", [9, 10, 11], False, True),
        ("ten", [5, 7, 9], True, True),
        ("frag", [9, 10, 11], True, True),
        ("type_bound", [7, 8, 10, 19], True, True),
        ("minmax", [7, 8, 10, 19], True, True),
        ("closure", [7, 8, 10, 19], True, True),
        ("silence", [7, 8, 10, 19], True, True),
        ("sheep", [7, 8, 10, 19], True, True),
        ("mas", [7, 8, 10, 19], True, True),
    ],
)
def test_checker_examples(name, generators, hypothesis, conclusion):
    assert _check(name, generators) == (hypothesis, conclusion)


def test_checkers_accept_naturals(naturals):
    findings = verifier_service.run_checkers(naturals, verifier_service.SEMIGROUP_CHECKERS)

    assert len(findings) == len(verifier_service.SEMIGROUP_CHECKERS)
    assert not any(finding.is_counterexample for finding in findings)
    stated_for_proper = {
        LemmaId.UNFOR,
        LemmaId.NOK,
        LemmaId.MAKE,
        LemmaId.BOX,
        LemmaId.MOS,
        LemmaId.TYPE_BOUND,
        LemmaId.MINMAX,
        LemmaId.CLOSURE,
        LemmaId.SILENCE,
        LemmaId.SHEEP,
        LemmaId.MAS,
    }
    for finding in findings:
        if finding.lemma_id in stated_for_proper:
            assert not finding.hypothesis_met


def test_counterexample_flag():
    finding = LemmaFinding(LemmaId.GOD, (2, 3), hypothesis_met=True, conclusion_met=False)

    assert finding.is_counterexample
    assert not LemmaFinding(LemmaId.GOD, (2, 3), False, True).is_counterexample


class TestResolveCheckers:
    def test_tags_are_case_insensitive(self):
        assert verifier_service.resolve_checkers(["god", "FAIL", "god"]) == [LemmaId.GOD, LemmaId.FAIL]

    def test_all_and_empty_select_everything(self):
        everything = list(verifier_service.SEMIGROUP_CHECKERS)

        assert verifier_service.resolve_checkers(["all"]) == everything
        assert verifier_service.resolve_checkers([]) == everything
        assert LemmaId.GENER not in everything

    @pytest.mark.parametrize("name", ["gener", "nope"])
    def test_rejects_unknown_or_grid_only(self, name):
        with pytest.raises(InvalidInput):
            verifier_service.resolve_checkers([name])


def test_checker_visitor_is_a_selection(s_7_8_10_19):
    visitor = verifier_service.CheckerVisitor([LemmaId.GOD, LemmaId.BOX])

    assert [finding.lemma_id for finding in visitor(s_7_8_10_19)] == [LemmaId.GOD, LemmaId.BOX]


def test_no_counterexample_up_to_genus_12():
    visitor = verifier_service.CheckerVisitor(verifier_service.SEMIGROUP_CHECKERS)
    summary = enumeration_service.enumerate(12, visitor)

    assert summary.counterexamples == []
    god = summary.checker_stats[LemmaId.GOD]
    assert god.checked == summary.total
    assert 0 < god.hypothesis_met < god.checked


def test_god_matches_wilf_report():
    for semigroup in enumeration_service.iter_semigroups(9):
        finding = verifier_service.check_god(semigroup)
        if finding.hypothesis_met:
            assert finding.conclusion_met


@pytest.mark.slow
def test_no_counterexample_up_to_genus_22():
    visitor = verifier_service.CheckerVisitor(verifier_service.SEMIGROUP_CHECKERS)
    summary = enumeration_service.enumerate(22, visitor, jobs=4)

    assert summary.counterexamples == []
