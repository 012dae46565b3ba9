"""
Application settings and configuration
"""

from functools import lru_cache

import psutil
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings


def _default_threads() -> int:
    """Physical core count, falling back to logical cores and then to 1"""
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1


class Settings(BaseSettings):
    """Engine settings with environment variable support (prefix TEICHCOUNT_)"""

    # Runtime
    environment: str = "development"
    threads: int = Field(default_factory=_default_threads)

    # Logging Configuration
    log_level: str = "INFO"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    log_json: bool = False

    # Oracle and search bounds
    oracle_bound_h2: int = 7
    oracle_bound_h11: int = 6
    step_budget_factor: int = 10  # normalization budget is factor * d**3
    separatrix_factor: int = 8    # separatrix overrun bound is factor * q * |v0|

    # Numerics
    mzv_precision: int = 30
    volume_chunk: int = 64

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "env_prefix": "teichcount_",
    }

    @field_validator("threads")
    @classmethod
    def clamp_threads(cls, v: int) -> int:
        """A zero or negative worker count means single-threaded"""
        return max(1, v)

    def step_budget(self, d: int) -> int:
        """Move budget for normalizing a degree-d state"""
        return self.step_budget_factor * d ** 3


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance

    Returns:
        Settings instance
    """
    return Settings()
