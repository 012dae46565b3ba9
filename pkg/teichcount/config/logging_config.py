"""
Logging configuration for the teichcount engine
"""

import logging
import logging.config
import sys
from typing import Dict, Any

from .settings import get_settings

# One logger per subpackage, all routed to stderr so reports on stdout stay clean
_PACKAGE_LOGGERS = (
    "teichcount",
    "teichcount.arith",
    "teichcount.counting",
    "teichcount.cover_enum",
    "teichcount.moves",
    "teichcount.flatsurf",
    "teichcount.workers",
    "teichcount.cli",
)


def setup_logging(level: str | None = None) -> None:
    """
    Setup logging configuration for the engine

    Args:
        level: Optional override of the configured log level
    """
    settings = get_settings()
    log_level = (level or settings.log_level).upper()

    logging_config: Dict[str, Any] = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {
                "format": settings.log_format,
                "datefmt": "%Y-%m-%d %H:%M:%S",
            },
            "detailed": {
                "format": "%(asctime)s - %(name)s - %(levelname)s - %(module)s:%(lineno)d - %(message)s",
                "datefmt": "%Y-%m-%d %H:%M:%S",
            },
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "level": log_level,
                "formatter": "detailed" if log_level == "DEBUG" else "default",
                "stream": sys.stderr,
            },
        },
        "loggers": {
            "": {
                "level": "WARNING",
                "handlers": ["console"],
                "propagate": False,
            },
            **{
                name: {
                    "level": log_level,
                    "handlers": ["console"],
                    "propagate": False,
                }
                for name in _PACKAGE_LOGGERS
            },
        },
    }

    logging.config.dictConfig(logging_config)

    logger = logging.getLogger("teichcount")
    logger.debug(f"Logging initialized at {log_level}")
    logger.debug(f"Worker threads: {settings.threads}")
