"""Commands reporting on a single semigroup given by generators."""
from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from ..repository import ReportRepository
from ..schemas import InvariantsRecord, ProfileRecord, WilfRecord
from ..services import profile_service, semigroup_service
from ..utils.parsing import parse_generators
from .common import EXIT_OK, EXIT_VIOLATION, build_config, handles_errors, output_options, resolve_format

gens_option = click.option(
    "--gens",
    required=True,
    help="Comma-separated generators, e.g. 7,8,10,19.",
)


@click.command("invariants")
@gens_option
@output_options
@handles_errors
def cmd_invariants(gens: str, out: Optional[Path], output_format: Optional[str]) -> int:
    """Print m, nu, f, conductor, genus, n(S), type, Apéry set and its extremes."""

    config = build_config(command="invariants", gens=parse_generators(gens), out=out, format=resolve_format(output_format))
    semigroup = semigroup_service.construct(config.gens or [])
    max_ap = semigroup_service.maximal_apery(semigroup)
    n = semigroup_service.n_of(semigroup)
    record = InvariantsRecord.build(
        semigroup,
        n=n,
        genus=semigroup.conductor - n,
        t=len(max_ap),
        min_ap=semigroup_service.minimal_apery(semigroup),
        max_ap=max_ap,
        pseudo_frobenius=[w - semigroup.multiplicity for w in max_ap],
    )
    with ReportRepository(output_format=config.format, out=config.out) as repository:
        repository.write(record)
    return EXIT_OK


@click.command("wilf")
@gens_option
@output_options
@handles_errors
def cmd_wilf(gens: str, out: Optional[Path], output_format: Optional[str]) -> int:
    """Evaluate Wilf's inequality by the direct, interval and epsilon routes."""

    config = build_config(command="wilf", gens=parse_generators(gens), out=out, format=resolve_format(output_format))
    semigroup = semigroup_service.construct(config.gens or [])
    report = profile_service.wilf_report(semigroup)
    with ReportRepository(output_format=config.format, out=config.out) as repository:
        repository.write(WilfRecord.build(semigroup, report))
    return EXIT_OK if report.satisfied else EXIT_VIOLATION


@click.command("profile")
@gens_option
@output_options
@handles_errors
def cmd_profile(gens: str, out: Optional[Path], output_format: Optional[str]) -> int:
    """Print L, rho, the interval counts n_k and the eta / epsilon tallies."""

    config = build_config(command="profile", gens=parse_generators(gens), out=out, format=resolve_format(output_format))
    semigroup = semigroup_service.construct(config.gens or [])
    profile = profile_service.interval_profile(semigroup)
    with ReportRepository(output_format=config.format, out=config.out) as repository:
        repository.write(ProfileRecord.build(semigroup, profile))
    return EXIT_OK
