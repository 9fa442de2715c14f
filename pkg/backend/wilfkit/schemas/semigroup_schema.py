"""Records describing a single semigroup: invariants, profile and Wilf report."""
from __future__ import annotations

from typing import List, Literal, Sequence

from pydantic import BaseModel, Field

from ..models import IntervalProfile, Semigroup, WilfReport


class InvariantsRecord(BaseModel):
    record: Literal["invariants"] = "invariants"
    gens: List[int]
    m: int
    nu: int
    f: int
    conductor: int
    genus: int
    n: int = Field(description="Number of elements of S in [0, f]")
    t: int
    apery: List[int]
    pseudo_frobenius: List[int]
    min_ap: List[int]
    max_ap: List[int]

    @classmethod
    def build(
        cls,
        semigroup: Semigroup,
        *,
        n: int,
        genus: int,
        t: int,
        min_ap: Sequence[int],
        max_ap: Sequence[int],
        pseudo_frobenius: List[int],
    ) -> "InvariantsRecord":
        return cls(
            gens=list(semigroup.generators),
            m=semigroup.multiplicity,
            nu=semigroup.embedding_dimension,
            f=semigroup.frobenius,
            conductor=semigroup.conductor,
            genus=genus,
            n=n,
            t=t,
            apery=list(semigroup.apery),
            pseudo_frobenius=pseudo_frobenius,
            min_ap=list(min_ap),
            max_ap=list(max_ap),
        )


class ProfileRecord(BaseModel):
    record: Literal["profile"] = "profile"
    gens: List[int]
    m: int
    L: int
    rho: int
    n_k: List[int]
    last_interval_members: int
    eta: List[int]
    epsilon: List[int]

    @classmethod
    def build(cls, semigroup: Semigroup, profile: IntervalProfile) -> "ProfileRecord":
        return cls(
            gens=list(semigroup.generators),
            m=profile.multiplicity,
            L=profile.L,
            rho=profile.rho,
            n_k=list(profile.n_k),
            last_interval_members=profile.last_interval_members,
            eta=list(profile.eta),
            epsilon=list(profile.epsilon),
        )


class WilfRecord(BaseModel):
    record: Literal["wilf"] = "wilf"
    gens: List[int]
    m: int
    nu: int
    f: int
    lhs: int
    rhs: int
    slack: int
    slack_interval: int
    slack_epsilon: int
    satisfied: bool

    @classmethod
    def build(cls, semigroup: Semigroup, report: WilfReport) -> "WilfRecord":
        return cls(
            gens=list(semigroup.generators),
            m=semigroup.multiplicity,
            nu=semigroup.embedding_dimension,
            f=semigroup.frobenius,
            lhs=report.wilf_lhs,
            rhs=report.wilf_rhs,
            slack=report.slack_direct,
            slack_interval=report.slack_interval,
            slack_epsilon=report.slack_epsilon,
            satisfied=report.satisfied,
        )
