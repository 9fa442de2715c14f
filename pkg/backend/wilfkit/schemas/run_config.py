"""Validated description of one CLI invocation."""
from __future__ import annotations

from pathlib import Path
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from ..config import OutputFormat

CommandName = Literal["invariants", "wilf", "profile", "verify", "gas"]


class GasRanges(BaseModel):
    m: Tuple[int, int]
    h: Tuple[int, int]
    d: Optional[Tuple[int, int]] = None
    l: Optional[Tuple[int, int]] = None  # noqa: E741


class RunConfig(BaseModel):
    command: CommandName
    gens: Optional[List[int]] = None
    gas: Optional[GasRanges] = None
    max_genus: Optional[int] = Field(None, ge=0)
    filter: str = "all"
    checkers: List[str] = Field(default_factory=lambda: ["ALL"])
    jobs: int = Field(1, ge=1)
    out: Optional[Path] = None
    format: OutputFormat = "human"
    node_limit: Optional[int] = Field(None, ge=1)

    @field_validator("checkers", mode="before")
    @classmethod
    def _split_checkers(cls, value: Union[List[str], str]) -> List[str]:
        if isinstance(value, str):
            return [item.strip().upper() for item in value.split(",") if item.strip()]
        return [str(item).strip().upper() for item in value]

    @model_validator(mode="after")
    def _one_input(self) -> "RunConfig":
        provided = [
            name
            for name, value in (("gens", self.gens), ("gas", self.gas), ("max_genus", self.max_genus))
            if value is not None
        ]
        expected = {
            "invariants": "gens",
            "wilf": "gens",
            "profile": "gens",
            "verify": "max_genus",
            "gas": "gas",
        }[self.command]
        if provided != [expected]:
            raise ValueError(f"command {self.command!r} takes exactly one input: {expected}")
        return self
