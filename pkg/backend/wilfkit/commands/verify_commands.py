"""Enumeration-backed verification of the partial results on Wilf's conjecture."""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

import click

from ..repository import ReportRepository
from ..schemas import FindingRecord, SummaryRecord
from ..services import enumeration_service, verifier_service
from .common import EXIT_OK, EXIT_VIOLATION, build_config, handles_errors, output_options, resolve_format, resolve_jobs

logger = logging.getLogger(__name__)


@click.command("verify")
@click.option("--max-genus", type=int, required=True, help="Enumerate every semigroup up to this genus.")
@click.option(
    "--checkers",
    default="all",
    show_default=True,
    help="Comma-separated checker tags (e.g. god,fail) or 'all'.",
)
@click.option(
    "--filter",
    "filter_name",
    type=click.Choice(sorted(enumeration_service.FILTERS)),
    default="all",
    show_default=True,
    help="Only run checkers on semigroups in this family; the tree is still fully traversed.",
)
@click.option("--jobs", type=int, default=None, help="Worker processes (default from WILFKIT_DEFAULT_JOBS).")
@click.option("--node-limit", type=int, default=None, help="Abort after visiting this many nodes.")
@output_options
@handles_errors
def cmd_verify(
    max_genus: int,
    checkers: str,
    filter_name: str,
    jobs: Optional[int],
    node_limit: Optional[int],
    out: Optional[Path],
    output_format: Optional[str],
) -> int:
    """Run checkers over the semigroup tree; exit 0 iff no counterexample is found."""

    config = build_config(
        command="verify",
        max_genus=max_genus,
        checkers=checkers,
        filter=filter_name,
        jobs=resolve_jobs(jobs),
        node_limit=node_limit,
        out=out,
        format=resolve_format(output_format),
    )
    selected = verifier_service.resolve_checkers(config.checkers)
    logger.info("Verifying %s up to genus %s", [item.value for item in selected], config.max_genus)

    with ReportRepository(output_format=config.format, out=config.out) as repository:
        summary = enumeration_service.enumerate_filtered(
            config.max_genus,
            enumeration_service.FILTERS[config.filter],
            verifier_service.CheckerVisitor(selected),
            jobs=config.jobs,
            node_limit=config.node_limit,
            on_finding=lambda finding: repository.write(FindingRecord.build(finding)),
        )
        repository.write(
            SummaryRecord.build(
                summary,
                max_genus=config.max_genus,
                filter_name=config.filter,
                checkers=[item.value for item in selected],
            )
        )
    return EXIT_OK if not summary.counterexamples else EXIT_VIOLATION
