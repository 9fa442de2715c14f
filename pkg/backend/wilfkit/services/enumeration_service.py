"""Exhaustive enumeration of numerical semigroups through the semigroup tree.

The tree is rooted at N. The children of S are ``S \\ {g}`` for every minimal
generator ``g`` greater than the Frobenius number, so every semigroup of
genus g appears exactly once at depth g. Subtrees are independent, which
lets the traversal fan out to worker processes once the frontier is wide
enough; partial summaries are merged associatively.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Dict, Iterable, List, Optional

from tqdm import tqdm

from ..config import get_settings
from ..errors import InvalidInput, ResourceLimit
from ..models import LemmaFinding, Semigroup, TreeNode, VerificationSummary
from . import profile_service, semigroup_service

logger = logging.getLogger(__name__)

Visitor = Callable[[Semigroup], Optional[Iterable[LemmaFinding]]]
Predicate = Callable[[Semigroup], bool]
FindingHook = Callable[[LemmaFinding], None]


def accept_all(semigroup: Semigroup) -> bool:
    return True


def large_embedding(semigroup: Semigroup) -> bool:
    return 2 * semigroup.embedding_dimension >= semigroup.multiplicity


def small_multiplicity(semigroup: Semigroup) -> bool:
    return semigroup.multiplicity <= 8


def tiny_multiplicity(semigroup: Semigroup) -> bool:
    return semigroup.multiplicity <= 6


def multiplicity_at_most_3(semigroup: Semigroup) -> bool:
    return semigroup.multiplicity <= 3


def low_embedding(semigroup: Semigroup) -> bool:
    return semigroup.embedding_dimension <= 3


FILTERS: Dict[str, Predicate] = {
    "all": accept_all,
    "large-embedding": large_embedding,
    "small-multiplicity": small_multiplicity,
    "tiny-multiplicity": tiny_multiplicity,
    "multiplicity-at-most-3": multiplicity_at_most_3,
    "low-embedding": low_embedding,
}


def merge_summaries(left: VerificationSummary, right: VerificationSummary) -> VerificationSummary:
    """Combine two partial summaries into a new one; neither input is modified."""

    return VerificationSummary().merge(left).merge(right)


def make_node(semigroup: Semigroup, depth: int) -> TreeNode:
    return TreeNode(
        semigroup=semigroup,
        effective_generators=semigroup_service.effective_generators(semigroup),
        depth=depth,
    )


def root() -> TreeNode:
    return make_node(semigroup_service.NATURALS, 0)


def children(node: TreeNode) -> List[TreeNode]:
    return [
        make_node(semigroup_service.remove_generator(node.semigroup, generator), node.depth + 1)
        for generator in node.effective_generators
    ]


def _visit(
    node: TreeNode,
    summary: VerificationSummary,
    visitor: Optional[Visitor],
    predicate: Predicate,
    on_finding: Optional[FindingHook],
) -> None:
    semigroup = node.semigroup
    summary.count_node(node.depth)
    summary.observe_slack(profile_service.wilf_slack(semigroup), node.depth, semigroup.generators)
    if not predicate(semigroup):
        return
    summary.visited += 1
    if visitor is None:
        return
    for finding in visitor(semigroup) or ():
        summary.record(finding)
        if on_finding is not None and finding.is_counterexample:
            on_finding(finding)


def _limit_exceeded(node_limit: int) -> ResourceLimit:
    logger.warning("Node limit %s reached; aborting enumeration", node_limit)
    return ResourceLimit(f"node limit {node_limit} exceeded", details={"node_limit": node_limit})


def _walk_subtree(
    start: TreeNode,
    max_genus: int,
    visitor: Optional[Visitor],
    predicate: Predicate,
    node_limit: int,
    on_finding: Optional[FindingHook] = None,
) -> VerificationSummary:
    summary = VerificationSummary()
    stack = [start]
    while stack:
        node = stack.pop()
        _visit(node, summary, visitor, predicate, on_finding)
        if summary.nodes_visited > node_limit:
            raise _limit_exceeded(node_limit)
        if node.depth < max_genus:
            stack.extend(children(node))
    return summary


def enumerate_filtered(
    max_genus: int,
    predicate: Optional[Predicate],
    visitor: Optional[Visitor],
    *,
    jobs: Optional[int] = None,
    node_limit: Optional[int] = None,
    on_finding: Optional[FindingHook] = None,
    progress: Optional[bool] = None,
) -> VerificationSummary:
    """Visit every semigroup of genus at most ``max_genus``.

    ``visitor`` is called once per semigroup accepted by ``predicate`` and
    may return findings to aggregate. The predicate never prunes: the whole
    tree is traversed. With ``jobs > 1`` the visitor and predicate run in
    worker processes and must be picklable (module-level functions or
    :class:`~wilfkit.services.verifier_service.CheckerVisitor`).
    """

    if max_genus < 0:
        raise InvalidInput(f"max_genus must be non-negative, got {max_genus}")
    settings = get_settings()
    jobs = jobs or settings.default_jobs
    node_limit = node_limit or settings.node_limit
    progress = settings.show_progress if progress is None else progress
    predicate = predicate or accept_all
    if jobs < 1:
        raise InvalidInput("jobs must be at least 1")

    if jobs == 1:
        summary = _walk_subtree(root(), max_genus, visitor, predicate, node_limit, on_finding)
        logger.info("Visited %s semigroups up to genus %s", summary.nodes_visited, max_genus)
        return summary

    summary = VerificationSummary()
    frontier = [root()]
    target = jobs * settings.split_factor
    while frontier and len(frontier) < target:
        expanded: List[TreeNode] = []
        for node in frontier:
            _visit(node, summary, visitor, predicate, on_finding)
            if node.depth < max_genus:
                expanded.extend(children(node))
        frontier = expanded
        if summary.nodes_visited > node_limit:
            raise _limit_exceeded(node_limit)

    if not frontier:
        return summary

    logger.info("Distributing %s subtrees over %s workers", len(frontier), jobs)
    remaining = node_limit - summary.nodes_visited
    pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        futures = [
            pool.submit(_walk_subtree, node, max_genus, visitor, predicate, remaining)
            for node in frontier
        ]
        completed = as_completed(futures)
        if progress:
            completed = tqdm(completed, total=len(futures), desc="subtrees", unit="tree")
        for future in completed:
            partial = future.result()
            if on_finding is not None:
                for finding in partial.counterexamples:
                    on_finding(finding)
            summary.merge(partial)
            logger.debug("Merged subtree of %s nodes", partial.nodes_visited)
            if summary.nodes_visited > node_limit:
                raise _limit_exceeded(node_limit)
    except ResourceLimit:
        pool.shutdown(wait=True, cancel_futures=True)
        raise
    except Exception:
        logger.exception("Subtree worker failed")
        pool.shutdown(wait=True, cancel_futures=True)
        raise
    pool.shutdown(wait=True)
    logger.info("Visited %s semigroups up to genus %s", summary.nodes_visited, max_genus)
    return summary


def enumerate(
    max_genus: int,
    visitor: Optional[Visitor] = None,
    **options,
) -> VerificationSummary:
    """Visit every numerical semigroup of genus at most ``max_genus``."""

    return enumerate_filtered(max_genus, None, visitor, **options)


def iter_semigroups(max_genus: int) -> Iterable[Semigroup]:
    """Depth-first stream of all semigroups up to ``max_genus`` in the calling process."""

    stack = [root()]
    while stack:
        node = stack.pop()
        yield node.semigroup
        if node.depth < max_genus:
            stack.extend(children(node))
