"""
Structured logging for long sweeps

This module provides a structured logger that:
- Emits one JSON object or one plain line per event on stderr
- Renders exact values (Fraction, quadratic surds) as strings
- Carries the sweep context (stratum, degree, chunk, ...) with every event
"""

import json
import logging
import sys
from datetime import datetime, timezone
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional


class LogLevel(str, Enum):
    """Standard log levels"""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class StructuredLogger:
    """
    Structured logger for sweep progress and failures

    Features:
    - JSON-formatted output for machine consumption
    - Exact numbers kept exact in the output
    - Contextual information (service, timestamp, sweep parameters)
    """

    def __init__(
        self,
        service_name: str,
        environment: str = "development",
        enable_json: bool = False,
    ):
        """
        Initialize structured logger

        Args:
            service_name: Name of the component
            environment: Environment (development, production, ...)
            enable_json: Whether to output JSON lines
        """
        self.service_name = service_name
        self.environment = environment
        self.enable_json = enable_json
        self.logger = logging.getLogger(service_name)

    def _to_jsonable(self, data: Any) -> Any:
        """
        Recursively convert values that json cannot encode

        Args:
            data: Data to convert (dict, list, or primitive)

        Returns:
            JSON-encodable data
        """
        if isinstance(data, dict):
            return {str(key): self._to_jsonable(value) for key, value in data.items()}
        if isinstance(data, (list, tuple)):
            return [self._to_jsonable(item) for item in data]
        if isinstance(data, Fraction):
            return f"{data.numerator}/{data.denominator}"
        if isinstance(data, Enum):
            return data.value
        if isinstance(data, (str, int, float, bool)) or data is None:
            return data
        return str(data)

    def _format_log_entry(
        self,
        level: str,
        message: str,
        extra: Optional[Dict[str, Any]] = None,
    ) -> str:
        timestamp = datetime.now(timezone.utc).isoformat()

        log_entry: Dict[str, Any] = {
            "timestamp": timestamp,
            "level": level,
            "service": self.service_name,
            "environment": self.environment,
            "message": message,
        }
        if extra:
            log_entry.update(self._to_jsonable(extra))

        if self.enable_json:
            return json.dumps(log_entry, sort_keys=True)

        extra_str = ""
        if extra:
            extra_str = " | " + " | ".join(
                f"{k}={v}" for k, v in self._to_jsonable(extra).items()
            )
        return f"{timestamp} [{level}] {self.service_name}: {message}{extra_str}"

    def _log(
        self,
        level: LogLevel,
        message: str,
        extra: Optional[Dict[str, Any]] = None,
    ) -> None:
        if not self.logger.isEnabledFor(getattr(logging, level.value)):
            return
        if self.enable_json:
            print(self._format_log_entry(level.value, message, extra), file=sys.stderr, flush=True)
            return
        log_method = getattr(self.logger, level.value.lower())
        log_method(self._format_log_entry(level.value, message, extra))

    def debug(self, message: str, **kwargs) -> None:
        """Log debug message"""
        self._log(LogLevel.DEBUG, message, kwargs if kwargs else None)

    def info(self, message: str, **kwargs) -> None:
        """Log info message"""
        self._log(LogLevel.INFO, message, kwargs if kwargs else None)

    def warning(self, message: str, **kwargs) -> None:
        """Log warning message"""
        self._log(LogLevel.WARNING, message, kwargs if kwargs else None)

    def error(self, message: str, **kwargs) -> None:
        """Log error message"""
        self._log(LogLevel.ERROR, message, kwargs if kwargs else None)

    def critical(self, message: str, **kwargs) -> None:
        """Log critical message"""
        self._log(LogLevel.CRITICAL, message, kwargs if kwargs else None)

    def log_sweep(
        self,
        sweep: str,
        tasks: int,
        failed: int,
        duration_ms: float,
        **kwargs
    ) -> None:
        """
        Log the completion of a parallel sweep

        Args:
            sweep: Sweep name
            tasks: Number of chunks executed
            failed: Number of chunks that raised
            duration_ms: Wall time in milliseconds
            **kwargs: Additional context
        """
        self.info(
            f"{sweep}: {tasks - failed}/{tasks} chunks",
            sweep=sweep,
            tasks=tasks,
            failed=failed,
            duration_ms=round(duration_ms, 3),
            **kwargs
        )

    def log_error_with_context(
        self,
        error: Exception,
        context: Optional[Dict[str, Any]] = None,
    ) -> None:
        """
        Log error with full context

        Args:
            error: Exception that occurred
            context: Additional context about the error
        """
        error_data: Dict[str, Any] = {
            "error_type": type(error).__name__,
            "error_message": str(error),
        }
        error_data.update(getattr(error, "context", {}) or {})
        if context:
            error_data.update(context)

        self.error(f"Error occurred: {error}", **error_data)


# Global logger instances cache
_loggers: Dict[str, StructuredLogger] = {}


def get_structured_logger(
    service_name: str,
    environment: Optional[str] = None,
) -> StructuredLogger:
    """
    Get or create a structured logger instance

    Args:
        service_name: Name of the component
        environment: Environment (defaults to the configured one)

    Returns:
        StructuredLogger instance
    """
    from .settings import get_settings

    settings = get_settings()
    if environment is None:
        environment = settings.environment

    cache_key = f"{service_name}:{environment}"
    if cache_key not in _loggers:
        _loggers[cache_key] = StructuredLogger(
            service_name=service_name,
            environment=environment,
            enable_json=settings.log_json or environment == "production",
        )

    return _loggers[cache_key]


def setup_structured_logging() -> StructuredLogger:
    """
    Setup structured logging for the engine

    Returns:
        The top-level structured logger
    """
    from .logging_config import setup_logging
    from .settings import get_settings

    settings = get_settings()
    setup_logging()
    _loggers.clear()

    logger = get_structured_logger("teichcount", settings.environment)
    logger.debug(
        "Structured logging initialized",
        environment=settings.environment,
        log_level=settings.log_level,
        threads=settings.threads,
    )
    return logger
