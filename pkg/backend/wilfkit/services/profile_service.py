"""Interval decomposition of a semigroup and Wilf's inequality by three routes.

The integers are cut into intervals ``I_k = [km, (k+1)m - 1]`` of length m.
Writing ``f + 1 = L*m + rho`` with ``1 <= rho <= m``, ``I_L`` is the last
interval not contained in S. Wilf's inequality ``f + 1 <= n(S) * nu`` is
equivalent to

    sum_{k<L} (n_k * nu - m) + (n_L * nu - rho) >= 0

and, grouping intervals by their number of members j,

    sum_j epsilon_j * (j * nu - m) + (n_L * nu - rho) >= 0.
"""
from __future__ import annotations

import logging
from typing import List, Tuple

import numpy as np

from ..errors import DegenerateSemigroup, IndexOutOfRange, InternalInconsistency
from ..models import IntervalProfile, Semigroup, WilfReport
from . import semigroup_service

logger = logging.getLogger(__name__)


def _require_nontrivial(semigroup: Semigroup) -> None:
    if semigroup.is_natural:
        raise DegenerateSemigroup(
            "the interval decomposition needs multiplicity at least 2",
            details={"generators": semigroup.generators},
        )


# Bytes of membership rows materialised at once while counting intervals.
_ROW_CHUNK_BYTES = 1 << 24


def _interval_counts(semigroup: Semigroup) -> Tuple[int, int, np.ndarray, int]:
    """Return ``(L, rho, members, n_last)`` with ``members[k] = |S ∩ I_k|`` for k = 0..L.

    Counts are taken over the membership rows a chunk at a time, so memory
    stays bounded however large ``f`` is.
    """

    m = semigroup.multiplicity
    L, remainder = divmod(semigroup.frobenius + 1, m)
    if remainder == 0:
        L, rho = L - 1, m
    else:
        rho = remainder
    members = np.empty(L + 1, dtype=np.int64)
    step = max(1, _ROW_CHUNK_BYTES // m)
    for start in range(0, L + 1, step):
        stop = min(start + step, L + 1)
        members[start:stop] = semigroup.membership_rows(start, stop).sum(axis=1)
    # f sits at offset rho - 1 of I_L and is not a member
    n_last = int(semigroup.membership_rows(L, L + 1)[0, :rho].sum())
    return L, rho, members, n_last


def eta_closed_form(semigroup: Semigroup, j: int) -> int:
    """Number of intervals holding exactly ``j`` members, read off the Apéry set."""

    _require_nontrivial(semigroup)
    m = semigroup.multiplicity
    if not 1 <= j <= m - 1:
        raise IndexOutOfRange(f"j must lie in [1, {m - 1}], got {j}", details={"j": j, "m": m})
    apery = semigroup.apery
    return apery[j] // m - apery[j - 1] // m


def eta_direct(semigroup: Semigroup) -> List[int]:
    """Eta by counting members interval by interval (j = 1..m-1)."""

    _require_nontrivial(semigroup)
    m = semigroup.multiplicity
    _, _, members, _ = _interval_counts(semigroup)
    counts = np.bincount(members, minlength=m + 1)
    return counts[1:m].tolist()


def interval_profile(semigroup: Semigroup) -> IntervalProfile:
    _require_nontrivial(semigroup)
    m = semigroup.multiplicity
    L, rho, members_per_interval, n_last = _interval_counts(semigroup)
    n_k = tuple(members_per_interval[:L].tolist()) + (n_last,)
    last_interval_members = int(members_per_interval[L])

    eta = tuple(eta_closed_form(semigroup, j) for j in range(1, m))
    epsilon = tuple(
        value - 1 if j == last_interval_members else value
        for j, value in enumerate(eta, start=1)
    )

    counted = np.bincount(members_per_interval[:L], minlength=m + 1)[1:m].tolist()
    if tuple(counted) != epsilon:
        raise InternalInconsistency(
            "epsilon derived from eta disagrees with direct interval counting",
            details={"generators": semigroup.generators, "derived": epsilon, "counted": counted},
        )

    return IntervalProfile(
        multiplicity=m,
        L=L,
        rho=rho,
        n_k=n_k,
        last_interval_members=last_interval_members,
        eta=eta,
        epsilon=epsilon,
    )


def wilf_slack(semigroup: Semigroup) -> int:
    return semigroup_service.n_of(semigroup) * semigroup.embedding_dimension - semigroup.conductor


def wilf_report(semigroup: Semigroup) -> WilfReport:
    nu = semigroup.embedding_dimension
    m = semigroup.multiplicity
    lhs = semigroup.conductor
    rhs = semigroup_service.n_of(semigroup) * nu
    direct = rhs - lhs
    if semigroup.is_natural:
        return WilfReport(lhs, rhs, direct, direct, direct)

    profile = interval_profile(semigroup)
    tail = profile.n_last * nu - profile.rho
    interval = sum(count * nu - m for count in profile.n_k[: profile.L]) + tail
    by_epsilon = sum(
        count * (j * nu - m) for j, count in enumerate(profile.epsilon, start=1)
    ) + tail

    if not direct == interval == by_epsilon:
        logger.error(
            "Wilf slack routes disagree for %s: direct=%s interval=%s epsilon=%s",
            semigroup.generators,
            direct,
            interval,
            by_epsilon,
        )
        raise InternalInconsistency(
            "Wilf slack routes disagree",
            details={
                "generators": semigroup.generators,
                "direct": direct,
                "interval": interval,
                "epsilon": by_epsilon,
            },
        )
    return WilfReport(lhs, rhs, direct, interval, by_epsilon)


def type_bound_check(semigroup: Semigroup) -> bool:
    """Whether ``f + 1 <= n(S) * (t + 1)`` holds."""

    if semigroup.is_natural:
        raise DegenerateSemigroup("the type bound is stated for semigroups other than N")
    t = semigroup_service.type_of(semigroup)
    return semigroup.conductor <= semigroup_service.n_of(semigroup) * (t + 1)


def god_lower_bound(semigroup: Semigroup, profile: IntervalProfile) -> int:
    """Lower bound for the interval slack used when ``2 nu >= m`` and ``m >= 3``.

    Drops the two-member intervals, charges every interval with three or
    more members at ``3 nu - m`` and counts single-member intervals through
    ``eta_1``.
    """

    m = semigroup.multiplicity
    if m < 3:
        raise DegenerateSemigroup("the bound needs multiplicity at least 3")
    nu = semigroup.embedding_dimension
    apery = semigroup.apery
    return (
        profile.eta_at(1) * (nu - m)
        + (apery[m - 1] // m - apery[2] // m - 1) * (3 * nu - m)
        + (profile.n_last * nu - profile.rho)
    )
