"""Common error envelope shared by human and JSONL output."""
from __future__ import annotations

from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel

from ..errors import WilfkitError


class ErrorResponse(BaseModel):
    """Consistent error payload written when a command fails."""

    record: Literal["error"] = "error"
    status: bool = False
    message: str
    code: Optional[str] = None
    details: Optional[Dict[str, Any]] = None

    @classmethod
    def from_error(cls, error: WilfkitError) -> "ErrorResponse":
        return cls(message=error.message, code=error.code, details=error.details or None)
