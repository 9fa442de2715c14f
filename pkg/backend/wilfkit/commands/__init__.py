"""Command exports for the CLI."""

from .gas_commands import cmd_gas
from .semigroup_commands import cmd_invariants, cmd_profile, cmd_wilf
from .verify_commands import cmd_verify

__all__ = [
    "cmd_gas",
    "cmd_invariants",
    "cmd_profile",
    "cmd_verify",
    "cmd_wilf",
]
