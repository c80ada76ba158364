"""Provide functionality for `qwalk.settings`."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Represent `Settings`."""

    model_config = SettingsConfigDict(
        env_prefix="QWALK_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    log_level: str = "INFO"

    unitarity_tolerance: float = Field(default=1e-12, gt=0)
    oracle_unitarity_tolerance: float = Field(default=1e-10, gt=0)
    norm_tolerance: float = Field(default=1e-9, gt=0)
    measurement_tolerance: float = Field(default=1e-6, gt=0)
    reverse_recovery_tolerance: float = Field(default=1e-6, gt=0)
    oracle_max_dimension: int = Field(default=5000, gt=0)

    default_threads: int = Field(default=1, ge=1)
    output_dir: str = "qwalk-out"
    probability_decimals: int = Field(default=12, ge=1)
    golden_tolerance: float = Field(default=0.002, gt=0)


@lru_cache
def get_settings() -> Settings:
    """Get settings.

    Returns:
        The resulting value.
    """
    return Settings()
