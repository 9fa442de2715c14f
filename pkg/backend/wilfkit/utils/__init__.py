"""Utility exports for the toolkit."""
from __future__ import annotations

from . import apery, parsing

__all__ = [
    "apery",
    "parsing",
]
