"""Exception hierarchy shared by services, commands and the enumeration engine.

Every error carries a stable ``code`` (used verbatim in JSONL output) and the
process ``exit_code`` the CLI returns when the error escapes a command.
"""
from __future__ import annotations

from typing import Any, Dict, Optional


class WilfkitError(Exception):
    """Base class for all toolkit errors."""

    code = "WILFKIT_ERROR"
    exit_code = 2

    def __init__(self, message: str, *, details: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InvalidInput(WilfkitError, ValueError):
    code = "INVALID_INPUT"


class EmptyInput(InvalidInput):
    code = "EmptyInput"


class NonCoprime(InvalidInput):
    code = "NonCoprime"


class ZeroGenerator(InvalidInput):
    code = "ZeroGenerator"


class IntegerOverflow(InvalidInput):
    code = "IntegerOverflow"


class DegenerateSemigroup(InvalidInput):
    """Raised when an operation needs m >= 2 but receives the semigroup N."""

    code = "DegenerateSemigroup"


class IndexOutOfRange(InvalidInput, IndexError):
    code = "IndexOutOfRange"


class InvalidGasSpec(InvalidInput):
    code = "InvalidGasSpec"


class ResourceLimit(WilfkitError):
    code = "ResourceLimit"
    exit_code = 3


class InternalInconsistency(WilfkitError, AssertionError):
    """Two independent computations of the same quantity disagreed."""

    code = "InternalInconsistency"
    exit_code = 4
