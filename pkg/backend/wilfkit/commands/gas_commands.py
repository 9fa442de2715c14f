"""Type formula checks over grids of generalized arithmetic sequences."""
from __future__ import annotations

from pathlib import Path
from typing import Optional

import click

from ..config import get_settings
from ..repository import ReportRepository
from ..schemas import GasRanges, GasRecord
from ..services import gas_service
from ..utils.parsing import parse_range
from .common import EXIT_OK, EXIT_VIOLATION, build_config, handles_errors, output_options, resolve_format, resolve_jobs


@click.command("gas")
@click.option("--m", "m_value", default=None, help="Multiplicity or range a..b (default 2..WILFKIT_GAS_MAX_M).")
@click.option("--h", "h_value", default=None, help="h or range a..b (default 1..WILFKIT_GAS_MAX_H).")
@click.option("--d", "d_value", default=None, help="d or range a..b (default 1..2m).")
@click.option("--l", "l_value", default=None, help="l or range a..b (default 1..m-2).")
@click.option("--jobs", type=int, default=None, help="Worker processes (default from WILFKIT_DEFAULT_JOBS).")
@output_options
@handles_errors
def cmd_gas(
    m_value: Optional[str],
    h_value: Optional[str],
    d_value: Optional[str],
    l_value: Optional[str],
    jobs: Optional[int],
    out: Optional[Path],
    output_format: Optional[str],
) -> int:
    """Compare computed and closed-form type for <m, hm+d, ..., hm+ld>."""

    settings = get_settings()
    ranges = GasRanges(
        m=parse_range(m_value) if m_value else (2, settings.gas_max_m),
        h=parse_range(h_value) if h_value else (1, settings.gas_max_h),
        d=parse_range(d_value) if d_value else None,
        l=parse_range(l_value) if l_value else None,
    )
    config = build_config(
        command="gas",
        gas=ranges,
        jobs=resolve_jobs(jobs),
        out=out,
        format=resolve_format(output_format),
    )
    specs = gas_service.gas_grid(ranges.m, ranges.h, ranges.d, ranges.l)
    all_good = True
    with ReportRepository(output_format=config.format, out=config.out) as repository:
        for evaluation in gas_service.evaluate_grid(specs, jobs=config.jobs):
            all_good = all_good and evaluation.match and evaluation.t_computed < evaluation.nu and evaluation.satisfied
            repository.write(GasRecord.build(evaluation))
    return EXIT_OK if all_good else EXIT_VIOLATION
