"""
Configuration validation module

Checks the engine settings before any sweep starts so that a bad
TEICHCOUNT_* variable fails fast with a readable message.
"""

import logging
from enum import Enum
from typing import Any, Dict, List

from .settings import Settings, get_settings


class ConfigError(Exception):
    """Exception raised for configuration validation errors"""
    pass


class Environment(str, Enum):
    """Valid environment values"""
    DEVELOPMENT = "development"
    TEST = "test"
    PRODUCTION = "production"


class ConfigValidator:
    """
    Validates engine configuration on startup

    Ensures:
    - Integer settings are within their supported ranges
    - Log level and environment are known values
    - Oracle bounds stay within the factorial-scale search limits
    """

    INT_RANGES = {
        "threads": (1, 256),
        "oracle_bound_h2": (2, 7),
        "oracle_bound_h11": (2, 6),
        "step_budget_factor": (1, 1000),
        "separatrix_factor": (2, 100),
        "mzv_precision": (16, 200),
        "volume_chunk": (1, 100000),
    }

    VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or get_settings()
        self.errors: List[str] = []
        self.warnings: List[str] = []
        self.logger = logging.getLogger(__name__)

    def validate_all(self) -> Dict[str, Any]:
        """
        Validate all configuration settings

        Returns:
            Dict containing validation results

        Raises:
            ConfigError: If validation fails
        """
        self.errors = []
        self.warnings = []

        self._validate_values()

        if self.errors:
            error_msg = "Configuration validation failed:\n" + "\n".join(f"  - {e}" for e in self.errors)
            raise ConfigError(error_msg)

        for warning in self.warnings:
            self.logger.warning(f"Configuration warning: {warning}")

        return {
            "valid": True,
            "errors": self.errors,
            "warnings": self.warnings,
            "environment": self.settings.environment,
        }

    def _validate_values(self) -> None:
        """Validate that configuration values are within acceptable ranges"""
        for name, (min_val, max_val) in self.INT_RANGES.items():
            value = getattr(self.settings, name)
            if value < min_val or value > max_val:
                self.errors.append(
                    f"{name.upper()} must be between {min_val} and {max_val}, got {value}"
                )

        valid_environments = [e.value for e in Environment]
        if self.settings.environment not in valid_environments:
            self.errors.append(
                f"ENVIRONMENT must be one of {valid_environments}, got '{self.settings.environment}'"
            )

        if self.settings.log_level.upper() not in self.VALID_LOG_LEVELS:
            self.errors.append(
                f"LOG_LEVEL must be one of {self.VALID_LOG_LEVELS}, got '{self.settings.log_level}'"
            )

        if self.settings.step_budget_factor < 10:
            self.warnings.append(
                "STEP_BUDGET_FACTOR below 10 may abort normalization of valid states"
            )


def validate_configuration(settings: Settings | None = None) -> Dict[str, Any]:
    """
    Validate engine configuration on startup

    Returns:
        Dict containing validation results

    Raises:
        ConfigError: If validation fails
    """
    validator = ConfigValidator(settings)
    return validator.validate_all()


def get_config_summary() -> Dict[str, str]:
    """
    Get a summary of current configuration

    Returns:
        Dict containing configuration summary
    """
    settings = get_settings()

    return {
        "environment": settings.environment,
        "threads": str(settings.threads),
        "log_level": settings.log_level,
        "oracle_bounds": f"H2<={settings.oracle_bound_h2}, H11<={settings.oracle_bound_h11}",
        "step_budget_factor": str(settings.step_budget_factor),
    }
