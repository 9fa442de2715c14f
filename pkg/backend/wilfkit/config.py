"""Centralized configuration for the semigroup toolkit."""
from __future__ import annotations

from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

OutputFormat = Literal["human", "jsonl"]


class Settings(BaseSettings):
    """Toolkit settings loaded from ``WILFKIT_*`` environment variables."""

    app_name: str = Field("wilfkit")
    log_level: str = Field("WARNING")
    default_jobs: int = Field(1, description="Worker processes used by enumeration runs")
    node_limit: int = Field(
        10**8,
        description="Abort an enumeration once this many tree nodes have been visited",
    )
    output_format: OutputFormat = Field("human")
    apery_vector_threshold: int = Field(
        512,
        description="Multiplicity from which the numpy relaxation kernel replaces the pure-Python one",
    )
    split_factor: int = Field(
        8,
        description="Frontier nodes per worker before subtrees are handed to the process pool",
    )
    gas_max_m: int = Field(60)
    gas_max_h: int = Field(4)
    show_progress: bool = Field(False)

    model_config = SettingsConfigDict(
        env_prefix="WILFKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    @field_validator("output_format", mode="before")
    @classmethod
    def _normalize_format(cls, value: str) -> str:
        if isinstance(value, str):
            return value.strip().lower()
        return value

    @field_validator("log_level", mode="before")
    @classmethod
    def _normalize_level(cls, value: str) -> str:
        if isinstance(value, str):
            return value.strip().upper()
        return value

    @field_validator("default_jobs", "node_limit", "apery_vector_threshold", "split_factor")
    @classmethod
    def _require_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be a positive integer")
        return value


@lru_cache
def get_settings() -> Settings:
    """Return a cached settings instance so values are computed once."""

    return Settings()


settings = get_settings()
