"""Utilities for error handling in the quantum-dot Bell-state simulator."""
from typing import Any, Dict, Optional


class QDotBellError(Exception):
    """Base exception class for all simulator errors."""

    def __init__(self, message: str, details: Optional[Any] = None):
        """
        Initialize a simulator error.

        Args:
            message: Error message
            details: Optional detailed error information
        """
        self.message = message
        self.details = details
        super().__init__(message)


class ConfigurationError(QDotBellError):
    """Exception raised for configuration-related errors."""

    def __init__(self, message: str, config_key: Optional[str] = None):
        """
        Initialize a configuration error.

        Args:
            message: Error message
            config_key: Key in configuration that caused the error
        """
        self.config_key = config_key
        super().__init__(message, {"config_key": config_key})


class ValidationError(QDotBellError):
    """Exception raised when an operation's preconditions are violated."""

    def __init__(self, message: str, field: Optional[str] = None, value: Optional[Any] = None):
        """
        Initialize a validation error.

        Args:
            message: Error message
            field: Field that failed validation
            value: Value that failed validation
        """
        self.field = field
        self.value = value
        super().__init__(message, {"field": field, "value": value})


class PulseWindowError(ValidationError):
    """Exception raised when a pulse search window holds no usable minimum."""

    def __init__(self, message: str, window: Optional[tuple] = None):
        super().__init__(message, field="t_window", value=window)
        self.window = window


class NumericalError(QDotBellError):
    """Exception raised when a numerical method fails to deliver a result."""


class IntegrationError(NumericalError):
    """Exception raised when the master-equation integrator gives up."""

    def __init__(self, message: str, t_reached: Optional[float] = None):
        """
        Initialize an integration error.

        Args:
            message: Error message
            t_reached: Last time the integrator reached before failing
        """
        self.t_reached = t_reached
        if t_reached is not None:
            message = f"{message} (reached t={t_reached:.6g})"
        super().__init__(message, {"t_reached": t_reached})


class QuadratureError(NumericalError):
    """Exception raised when adaptive quadrature does not converge."""

    def __init__(self, message: str, error_estimate: Optional[float] = None):
        """
        Initialize a quadrature error.

        Args:
            message: Error message
            error_estimate: Error estimate achieved when the quadrature stopped
        """
        self.error_estimate = error_estimate
        if error_estimate is not None:
            message = f"{message} (error estimate {error_estimate:.3e})"
        super().__init__(message, {"error_estimate": error_estimate})


def handle_error(error: Exception) -> QDotBellError:
    """
    Convert an arbitrary exception into a QDotBellError.

    Args:
        error: Original exception

    Returns:
        QDotBellError: Converted exception
    """
    import numpy as np
    import yaml

    if isinstance(error, QDotBellError):
        return error

    if isinstance(error, np.linalg.LinAlgError):
        return NumericalError(f"Linear algebra failure: {str(error)}")

    if isinstance(error, FloatingPointError):
        return NumericalError(f"Floating point failure: {str(error)}")

    if isinstance(error, yaml.YAMLError):
        return ConfigurationError(f"Invalid YAML configuration: {str(error)}")

    if isinstance(error, OSError):
        return ConfigurationError(f"I/O error: {str(error)}")

    return QDotBellError(f"Unexpected error: {str(error)}")


class ErrorHandler:
    """Handler for mapping errors to exit codes and display payloads."""

    SUCCESS = 0
    NUMERICAL_FAILURE = 1
    CONFIGURATION_FAILURE = 2

    @staticmethod
    def exit_code(error: Optional[Exception]) -> int:
        """
        Determine the process exit code for an error.

        Args:
            error: The exception to classify, or None on success

        Returns:
            int: 0 success, 1 numerical failure, 2 configuration error
        """
        if error is None:
            return ErrorHandler.SUCCESS

        if isinstance(error, (ConfigurationError, ValidationError)):
            return ErrorHandler.CONFIGURATION_FAILURE

        return ErrorHandler.NUMERICAL_FAILURE

    @staticmethod
    def format_error_for_display(error: Exception) -> Dict[str, Any]:
        """
        Format an error for display in the CLI.

        Args:
            error: The exception to format

        Returns:
            Dict: Formatted error information
        """
        if not isinstance(error, QDotBellError):
            return {
                "message": str(error),
                "type": error.__class__.__name__
            }

        result = {
            "message": error.message,
            "type": error.__class__.__name__
        }

        if isinstance(error, ConfigurationError) and error.config_key:
            result["config_key"] = error.config_key

        if isinstance(error, ValidationError):
            result["field"] = error.field

        if isinstance(error, IntegrationError):
            result["t_reached"] = error.t_reached

        if isinstance(error, QuadratureError):
            result["error_estimate"] = error.error_estimate

        return result
