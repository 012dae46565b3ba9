"""
Exit-code routing for command-line failures
"""

import logging
from typing import Any, Dict, Optional

from ..config.structured_logger import get_structured_logger
from ..config.validator import ConfigError
from ..errors import GeometricDegeneracy, InvariantViolation, TeichcountError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DEGENERACY = 2
EXIT_INVARIANT = 3


class CliErrorHandler:
    """Maps engine exceptions to exit codes and logs them with their context"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self.events = get_structured_logger("teichcount.cli")

    def handle_usage_error(self, error: Exception, context: Dict[str, Any]) -> int:
        """
        Bad arguments, out-of-range values and configuration errors

        Returns:
            Exit code 1
        """
        self.logger.error(f"Usage error: {error}")
        self.events.log_error_with_context(error, context)
        return EXIT_USAGE

    def handle_degeneracy(self, error: GeometricDegeneracy, context: Dict[str, Any]) -> int:
        """
        A trace could not be completed on the flat surface

        Returns:
            Exit code 2
        """
        self.logger.error(f"Geometric degeneracy: {error}")
        self.events.log_error_with_context(error, context)
        return EXIT_DEGENERACY

    def handle_invariant_violation(self, error: Exception, context: Dict[str, Any]) -> int:
        """
        An identity the engine relies on failed, or an unexpected exception

        Returns:
            Exit code 3
        """
        self.logger.critical(f"Invariant violation: {type(error).__name__} - {error}")
        self.events.log_error_with_context(error, context)
        return EXIT_INVARIANT

    def handle(self, error: Exception, command: Optional[str] = None) -> int:
        """
        Generic handler that routes to the specific handlers

        Args:
            error: The exception raised by a subcommand
            command: Name of the subcommand, if parsing got that far

        Returns:
            Process exit code
        """
        context = {"command": command} if command else {}
        if isinstance(error, GeometricDegeneracy):
            return self.handle_degeneracy(error, context)
        if isinstance(error, InvariantViolation):
            return self.handle_invariant_violation(error, context)
        if isinstance(error, (TeichcountError, ConfigError)):
            return self.handle_usage_error(error, context)
        return self.handle_invariant_violation(error, context)
