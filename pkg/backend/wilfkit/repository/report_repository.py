"""Output persistence for command results.

Records are written either as JSON lines (one ``model_dump_json`` object per
line, stable field names) or as human-readable ``key: value`` text rendered
through ``rich``. Writes go through a single repository instance so output
stays serialized even when the enumeration runs on several processes.
"""
from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import IO, Any, Optional

from pydantic import BaseModel
from rich.console import Console

from ..config import OutputFormat
from ..errors import WilfkitError
from ..schemas import ErrorResponse

logger = logging.getLogger(__name__)

_HUMAN_LABELS = {"n_k": "n"}
_INLINE_RECORDS = {"gas", "counterexample"}


def _human_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        if value and isinstance(value[0], dict):
            return "; ".join(
                " ".join(f"{key}={_human_value(item)}" for key, item in entry.items()) for entry in value
            )
        return "[" + ",".join(_human_value(item) for item in value) + "]"
    if isinstance(value, dict):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


class ReportRepository:
    """Serialized sink for records, bound to stdout or a file."""

    def __init__(self, *, output_format: OutputFormat = "human", out: Optional[Path] = None) -> None:
        self._format = output_format
        self._path = out
        self._stream: Optional[IO[str]] = None
        self._console: Optional[Console] = None

    def __enter__(self) -> "ReportRepository":
        if self._path is not None:
            self._path.parent.mkdir(parents=True, exist_ok=True)
            self._stream = open(self._path, "w", encoding="utf-8")
        else:
            self._stream = sys.stdout
        self._console = Console(
            file=self._stream,
            highlight=False,
            markup=False,
            emoji=False,
            soft_wrap=True,
        )
        return self

    def __exit__(self, *exc_info: object) -> None:
        if self._stream is not None:
            self._stream.flush()
            if self._path is not None:
                self._stream.close()
                logger.info("Wrote report to %s", self._path)
        self._stream = None

    def write(self, record: BaseModel) -> None:
        if self._stream is None:
            raise RuntimeError("ReportRepository used outside of its context")
        if self._format == "jsonl":
            self._stream.write(record.model_dump_json() + "\n")
            self._stream.flush()
            return
        payload = record.model_dump(mode="json")
        kind = payload.pop("record", None)
        pairs = [(_HUMAN_LABELS.get(key, key), _human_value(value)) for key, value in payload.items()]
        assert self._console is not None
        if kind in _INLINE_RECORDS:
            self._console.print(", ".join(f"{key}: {value}" for key, value in pairs))
        else:
            for key, value in pairs:
                self._console.print(f"{key}: {value}")

    def write_error(self, error: WilfkitError) -> None:
        self.write(ErrorResponse.from_error(error))
