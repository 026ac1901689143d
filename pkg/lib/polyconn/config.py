from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Hard cap on ground-set size; the dense table has 2^n entries.
    max_ground_size: int = Field(default=24, ge=0, le=24)
    # Largest n for 4^n pair enumerations.
    pair_check_limit: int = Field(default=12, ge=0)
    # Largest n for which identity tables try every A ⊆ E.
    minor_exhaustive_limit: int = Field(default=7, ge=0)
    generator_cap: int = Field(default=12, ge=0)
    workers: int = Field(default=1, ge=1)
    log_json: bool = False
    metrics: bool = False

    model_config = SettingsConfigDict(env_prefix="POLYCONN_", env_file=".env", extra="ignore")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
