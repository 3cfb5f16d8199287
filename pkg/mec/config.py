"""Configuration management using Pydantic Settings."""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


def parse_comma_list(value: str | None) -> list[str]:
    """Parse comma-separated string into list."""
    if not value or not value.strip():
        return []
    return [item.strip() for item in value.split(",") if item.strip()]


def parse_int_range(value: str) -> list[int]:
    """Parse "2..11", "4,5,6" or "7" into a list of ints."""
    value = value.strip()
    if ".." in value:
        lo, hi = value.split("..", 1)
        start, stop = int(lo), int(hi)
        if stop < start:
            raise ValueError(f"Empty range: {value}")
        return list(range(start, stop + 1))
    return [int(item) for item in parse_comma_list(value)]


def parse_shapes(value: str) -> list[tuple[int, int]]:
    """Parse "6x3,7x3" into (n1, n2) pairs."""
    shapes = []
    for item in parse_comma_list(value):
        left, _, right = item.lower().partition("x")
        shapes.append((int(left), int(right or left)))
    return shapes


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="MEC_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(default="WARNING")
    log_format: Literal["json", "text"] = Field(default="text")
    log_file_enabled: bool = Field(default=False)
    log_file_path: str = Field(default="./data/logs")
    log_file_retention_days: int = Field(default=7, ge=1, le=30)

    # Exact solvers
    dp_max_vertices: int = Field(
        default=20,
        ge=4,
        le=24,
        description="Largest n1 + n2 the bitmask DP accepts (memory grows as 2^V * V)",
    )
    enum_max_vertices: int = Field(
        default=14,
        ge=2,
        le=16,
        description="Largest n1 + n2 the vertex enumeration accepts",
    )
    exact_timeout_seconds: float = Field(default=120.0, gt=0)

    # Benchmarks and sweeps
    bench_runs: int = Field(default=100, ge=1, le=10000)
    bench_warmup: bool = Field(default=True)
    seed: int = Field(default=0, ge=0)
    workers: int = Field(default=1, ge=1, le=64)

    # Guarantee checks
    thm_slack: float = Field(default=1e-9, ge=0, le=1e-3)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
