"""Shared options and error handling for CLI commands."""
from __future__ import annotations

import functools
import logging
from pathlib import Path
from typing import Any, Callable, Optional

import click
from pydantic import ValidationError

from ..config import get_settings
from ..errors import InvalidInput, WilfkitError
from ..repository import ReportRepository
from ..schemas import ErrorResponse, RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INVALID = 2


def output_options(command: Callable[..., Any]) -> Callable[..., Any]:
    command = click.option(
        "--format",
        "output_format",
        type=click.Choice(["human", "jsonl"], case_sensitive=False),
        default=None,
        help="Output format (default from WILFKIT_OUTPUT_FORMAT).",
    )(command)
    command = click.option(
        "--out",
        type=click.Path(dir_okay=False, path_type=Path),
        default=None,
        help="Write records to this file instead of stdout.",
    )(command)
    return command


def resolve_format(output_format: Optional[str]) -> str:
    return (output_format or get_settings().output_format).lower()


def resolve_jobs(jobs: Optional[int]) -> int:
    return get_settings().default_jobs if jobs is None else jobs


def build_config(**values: Any) -> RunConfig:
    try:
        return RunConfig(**values)
    except ValidationError as exc:
        raise InvalidInput(
            "invalid command configuration",
            details={"errors": [error["msg"] for error in exc.errors()]},
        ) from exc


def _report_failure(error: WilfkitError, output_format: str, out: Optional[Path]) -> None:
    if output_format == "jsonl" and out is None:
        click.echo(ErrorResponse.from_error(error).model_dump_json())
        return
    if output_format == "jsonl":
        with ReportRepository(output_format="jsonl", out=out) as repository:
            repository.write_error(error)
    click.echo(f"error: {error.code}: {error.message}", err=True)


def handles_errors(command: Callable[..., int]) -> Callable[..., None]:
    """Turn toolkit errors into an error record plus the matching exit code."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        output_format = resolve_format(kwargs.get("output_format"))
        try:
            code = command(*args, **kwargs)
        except WilfkitError as error:
            logger.debug("Command failed", exc_info=True)
            _report_failure(error, output_format, kwargs.get("out"))
            raise click.exceptions.Exit(error.exit_code) from error
        raise click.exceptions.Exit(code or EXIT_OK)

    return wrapper
