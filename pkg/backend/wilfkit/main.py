"""Click application factory for the semigroup toolkit."""
from __future__ import annotations

import logging
from typing import Optional

import click
from rich.console import Console
from rich.logging import RichHandler

from .commands import cmd_gas, cmd_invariants, cmd_profile, cmd_verify, cmd_wilf
from .config import settings


def configure_logging(level: Optional[str] = None) -> None:
    """Send log records to stderr so stdout carries records only."""

    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)],
        force=True,
    )


def create_cli() -> click.Group:
    @click.group(name=settings.app_name)
    @click.option(
        "--log-level",
        type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
        default=None,
        help="Log level for stderr diagnostics (default from WILFKIT_LOG_LEVEL).",
    )
    def cli(log_level: Optional[str]) -> None:
        """Numerical semigroup invariants, Wilf's inequality and exhaustive checks."""

        configure_logging(log_level)

    cli.add_command(cmd_invariants)
    cli.add_command(cmd_wilf)
    cli.add_command(cmd_profile)
    cli.add_command(cmd_verify)
    cli.add_command(cmd_gas)
    return cli


cli = create_cli()


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
