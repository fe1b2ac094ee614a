from functools import lru_cache
from typing import Optional

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from cohexp.logger.config import LoggerConfig


class _BaseSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="COHEXP__",
        env_file=".env",
        env_nested_delimiter="__",
        env_file_encoding="utf-8",
        extra="ignore",
        case_sensitive=False,
    )


class LimitsConfig(BaseModel):
    enumeration_cap: int = Field(
        default=10**6,
        ge=1,
        description="Largest element set or subspace list that may be materialized.",
    )
    coset_degree_cap: int = Field(
        default=10**4, ge=1, description="Largest index allowed for a coset action."
    )
    cochain_rank_cap: int = Field(
        default=10**4, ge=1, description="Largest cochain rank for the tensor engine."
    )
    bar_order_cap: int = Field(
        default=9, ge=1, description="Largest group order accepted by the bar engine."
    )
    bar_rank_cap: int = Field(
        default=10**5,
        ge=1,
        description="Largest normalized bar cochain rank, (|G|-1)^(N+1).",
    )
    frattini_pair_cap: int = Field(
        default=10**6,
        ge=1,
        description="Above |H|^2 = cap, Frattini subgroups use generator commutators.",
    )
    sweep_budget: int = Field(
        default=10**7,
        ge=1,
        description="Largest exhaustive sweep; larger sweeps are sampled.",
    )


class VerifyConfig(BaseModel):
    seed: int = Field(default=20240101, description="Seed for sampled sweeps.")
    threads: int = Field(default=1, ge=1, description="Worker threads for sweeps.")
    sample_pairs: int = Field(
        default=10**5, ge=1, description="Number of pairs drawn by a sampled sweep."
    )


class CohexpSettings(_BaseSettings):
    logger: LoggerConfig = Field(default=LoggerConfig())
    limits: LimitsConfig = Field(default=LimitsConfig())
    verify: VerifyConfig = Field(default=VerifyConfig())


class SettingsError(Exception):
    """Base exception for settings-related errors."""

    ...


@lru_cache(maxsize=1)
def get_settings() -> CohexpSettings:
    """Get the singleton CohexpSettings instance, cached for performance."""
    return CohexpSettings()


def get_limits() -> LimitsConfig:
    return get_settings().limits


def get_verify_settings() -> VerifyConfig:
    return get_settings().verify


def resolve_cap(explicit: Optional[int], name: str) -> int:
    """
    Return an explicit cap if given, otherwise the configured one.

    Args:
        explicit: Value passed by the caller, or None.
        name: Field name on LimitsConfig (e.g. "enumeration_cap").

    Raises:
        SettingsError: If the name is not a known limit.
    """
    if explicit is not None:
        return explicit
    limits = get_limits()
    if name not in LimitsConfig.model_fields:
        raise SettingsError(
            f"Unknown limit '{name}'. Available limits: {list(LimitsConfig.model_fields)}"
        )
    return int(getattr(limits, name))
