"""Parsing helpers for command-line values."""
from __future__ import annotations

import re
from typing import List, Tuple

from ..errors import EmptyInput, InvalidInput

_RANGE_PATTERN = re.compile(r"^\s*(?P<low>-?\d+)\s*(?:\.\.\s*(?P<high>-?\d+)\s*)?$")


def parse_generators(raw: str) -> List[int]:
    """Parse ``"7, 8,10,19"`` into ``[7, 8, 10, 19]``; whitespace is ignored."""

    cleaned = re.sub(r"\s+", "", raw or "")
    if not cleaned:
        raise EmptyInput("generator list is empty")
    values: List[int] = []
    for token in cleaned.split(","):
        if not token:
            raise InvalidInput(f"empty entry in generator list {raw!r}")
        try:
            values.append(int(token))
        except ValueError as exc:
            raise InvalidInput(f"not an integer: {token!r}", details={"input": raw}) from exc
    return values


def parse_range(raw: str) -> Tuple[int, int]:
    """Parse ``"3"`` or ``"1..4"`` into an inclusive ``(low, high)`` pair."""

    match = _RANGE_PATTERN.match(raw or "")
    if not match:
        raise InvalidInput(f"expected an integer or a range 'a..b', got {raw!r}")
    low = int(match.group("low"))
    high = int(match.group("high")) if match.group("high") is not None else low
    if high < low:
        raise InvalidInput(f"empty range {raw!r}")
    return low, high
