"""Tests for the error handling utilities module."""
import unittest

import numpy as np
import yaml

from qdot_bell.utils.errors import (
    ConfigurationError,
    ErrorHandler,
    IntegrationError,
    NumericalError,
    PulseWindowError,
    QDotBellError,
    QuadratureError,
    ValidationError,
    handle_error,
)


class TestErrorClasses(unittest.TestCase):
    """Test case for the error classes."""

    def test_base_error(self):
        error = QDotBellError("Test error", {"key": "value"})
        self.assertEqual(str(error), "Test error")
        self.assertEqual(error.details, {"key": "value"})

    def test_configuration_error(self):
        error = ConfigurationError("Unknown configuration key: colour", "colour")
        self.assertEqual(error.config_key, "colour")
        self.assertEqual(error.details, {"config_key": "colour"})

    def test_validation_error(self):
        error = ValidationError("n must be a non-negative integer", "n", -1)
        self.assertEqual(error.field, "n")
        self.assertEqual(error.value, -1)

    def test_pulse_window_error(self):
        error = PulseWindowError("no minimum", window=(0.0, 2.0))
        self.assertIsInstance(error, ValidationError)
        self.assertEqual(error.field, "t_window")
        self.assertEqual(error.window, (0.0, 2.0))

    def test_numerical_errors_carry_diagnostics(self):
        error = IntegrationError("Master equation integration failed", t_reached=1.5)
        self.assertIn("reached t=1.5", error.message)
        quad = QuadratureError("Quadrature did not converge", error_estimate=1e-3)
        self.assertIn("1.000e-03", quad.message)
        self.assertIsInstance(quad, NumericalError)


class TestHandleError(unittest.TestCase):
    """Test case for converting foreign exceptions."""

    def test_passthrough(self):
        error = ValidationError("bad")
        self.assertIs(handle_error(error), error)

    def test_linear_algebra_failure(self):
        self.assertIsInstance(handle_error(np.linalg.LinAlgError("singular")), NumericalError)

    def test_yaml_and_io_failures(self):
        self.assertIsInstance(handle_error(yaml.YAMLError("broken")), ConfigurationError)
        self.assertIsInstance(handle_error(FileNotFoundError("missing.conf")), ConfigurationError)

    def test_unexpected(self):
        error = handle_error(RuntimeError("boom"))
        self.assertEqual(type(error), QDotBellError)
        self.assertIn("boom", error.message)


class TestErrorHandler(unittest.TestCase):
    """Test case for the ErrorHandler class."""

    def test_exit_codes(self):
        self.assertEqual(ErrorHandler.exit_code(None), 0)
        self.assertEqual(ErrorHandler.exit_code(ConfigurationError("x")), 2)
        self.assertEqual(ErrorHandler.exit_code(PulseWindowError("x")), 2)
        self.assertEqual(ErrorHandler.exit_code(IntegrationError("x")), 1)
        self.assertEqual(ErrorHandler.exit_code(QuadratureError("x")), 1)

    def test_format_error_for_display(self):
        formatted = ErrorHandler.format_error_for_display(IntegrationError("stalled", t_reached=2.0))
        self.assertEqual(formatted["type"], "IntegrationError")
        self.assertEqual(formatted["t_reached"], 2.0)

        formatted = ErrorHandler.format_error_for_display(ValidationError("bad", field="alpha"))
        self.assertEqual(formatted["field"], "alpha")

        formatted = ErrorHandler.format_error_for_display(ValueError("plain"))
        self.assertEqual(formatted, {"message": "plain", "type": "ValueError"})


if __name__ == "__main__":
    unittest.main()
