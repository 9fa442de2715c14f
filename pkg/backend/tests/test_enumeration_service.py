from __future__ import annotations

import pytest

from wilfkit.errors import InvalidInput, ResourceLimit
from wilfkit.models import LemmaFinding, LemmaId, VerificationSummary
from wilfkit.services import enumeration_service, semigroup_service, verifier_service

from .oracles import semigroups_by_gap_sets

GENUS_COUNTS = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857]


def test_root_only():
    summary = enumeration_service.enumerate(0)

    assert summary.genus_counts == [1]
    assert summary.witness == (1,)
    assert summary.wilf_min_slack == 0


def test_small_genus_counts():
    assert enumeration_service.enumerate(4).genus_counts == GENUS_COUNTS[:5]


def test_genus_counts_to_ten():
    summary = enumeration_service.enumerate(10)

    assert summary.genus_counts == GENUS_COUNTS[:11]
    assert summary.total == sum(GENUS_COUNTS[:11])
    assert summary.nodes_visited == summary.visited == summary.total


def test_each_semigroup_appears_once_at_its_genus():
    seen = set()
    for node in _walk(15):
        assert semigroup_service.genus(node.semigroup) == node.depth
        for child in enumeration_service.children(node):
            assert child.depth == node.depth + 1
        assert node.semigroup.generators not in seen
        seen.add(node.semigroup.generators)
    assert len(seen) == sum(GENUS_COUNTS)


def test_matches_gap_set_oracle():
    produced = {semigroup.generators for semigroup in enumeration_service.iter_semigroups(8)}

    assert produced == semigroups_by_gap_sets(8)


def test_negative_genus_is_rejected():
    with pytest.raises(InvalidInput):
        enumeration_service.enumerate(-1)


@pytest.mark.parametrize("jobs", [1, 2])
def test_node_limit(jobs):
    with pytest.raises(ResourceLimit):
        enumeration_service.enumerate(10, jobs=jobs, node_limit=50)


def test_filter_does_not_prune_the_traversal():
    summary = enumeration_service.enumerate_filtered(
        4, enumeration_service.multiplicity_at_most_3, None
    )
    expected = sum(
        1 for generators in semigroups_by_gap_sets(4) if generators[0] <= 3
    )

    assert summary.genus_counts == GENUS_COUNTS[:5]
    assert summary.visited == expected


def test_always_true_filter_matches_enumerate():
    filtered = enumeration_service.enumerate_filtered(6, enumeration_service.accept_all, None)

    assert filtered.genus_counts == enumeration_service.enumerate(6).genus_counts


def test_god_on_large_embedding_family():
    summary = enumeration_service.enumerate_filtered(
        6,
        enumeration_service.FILTERS["large-embedding"],
        verifier_service.CheckerVisitor([LemmaId.GOD]),
    )

    assert summary.counterexamples == []
    assert summary.checker_stats[LemmaId.GOD].checked == summary.visited


def test_findings_reach_the_hook():
    def visitor(semigroup):
        if semigroup.generators == (2, 3):
            return [LemmaFinding(LemmaId.GOD, semigroup.generators, True, False)]
        return None

    reported = []
    summary = enumeration_service.enumerate(3, visitor, on_finding=reported.append)

    assert [finding.generators for finding in reported] == [(2, 3)]
    assert summary.counterexamples == reported


def test_parallel_run_is_deterministic():
    visitor = verifier_service.CheckerVisitor(verifier_service.SEMIGROUP_CHECKERS)

    sequential = enumeration_service.enumerate(10, visitor, jobs=1)
    parallel = enumeration_service.enumerate(10, visitor, jobs=2)

    assert parallel.genus_counts == sequential.genus_counts
    assert parallel.wilf_min_slack == sequential.wilf_min_slack
    assert parallel.witness == sequential.witness
    assert parallel.counterexamples == sequential.counterexamples
    assert {
        lemma_id: (stats.checked, stats.hypothesis_met)
        for lemma_id, stats in parallel.checker_stats.items()
    } == {
        lemma_id: (stats.checked, stats.hypothesis_met)
        for lemma_id, stats in sequential.checker_stats.items()
    }


def test_summary_merge_is_order_independent():
    left, right = VerificationSummary(), VerificationSummary()
    left.count_node(2)
    left.observe_slack(3, 2, (3, 5, 7))
    right.count_node(1)
    right.observe_slack(3, 1, (2, 5))
    right.record(LemmaFinding(LemmaId.BOX, (2, 5), True, False))

    forward = VerificationSummary().merge(left).merge(right)
    backward = VerificationSummary().merge(right).merge(left)

    assert forward.genus_counts == backward.genus_counts == [0, 1, 1]
    assert forward.witness == backward.witness == (2, 5)
    assert forward.counterexamples == backward.counterexamples


def _walk(max_genus):
    stack = [enumeration_service.root()]
    while stack:
        node = stack.pop()
        yield node
        if node.depth < max_genus:
            stack.extend(enumeration_service.children(node))


@pytest.mark.slow
def test_wilf_to_genus_25():
    summary = enumeration_service.enumerate(25, jobs=4)

    assert summary.wilf_min_slack >= 0


def test_merge_summaries_leaves_inputs_untouched():
    left, right = VerificationSummary(), VerificationSummary()
    left.count_node(0)
    right.count_node(1)

    merged = enumeration_service.merge_summaries(left, right)

    assert merged.genus_counts == [1, 1]
    assert left.genus_counts == [1]
    assert right.genus_counts == [0, 1]
