"""Tests for the validation utilities module."""
import math
import unittest

from qdot_bell.utils.errors import ValidationError
from qdot_bell.utils.validation import (
    validate_finite,
    validate_in_set,
    validate_non_negative,
    validate_non_negative_int,
    validate_positive,
    validate_time_grid,
    validate_window,
)


class TestScalarValidation(unittest.TestCase):
    """Test case for scalar checks."""

    def test_finite(self):
        self.assertEqual(validate_finite(3, "x"), 3.0)
        for value in (math.nan, math.inf, None):
            with self.assertRaises(ValidationError):
                validate_finite(value, "x")

    def test_sign_checks(self):
        self.assertEqual(validate_non_negative(0.0, "t"), 0.0)
        with self.assertRaises(ValidationError):
            validate_non_negative(-1e-300, "t")
        with self.assertRaises(ValidationError):
            validate_positive(0.0, "omega")

    def test_non_negative_int(self):
        self.assertEqual(validate_non_negative_int(4.0, "n"), 4)
        for value in (-1, 2.5, True):
            with self.assertRaises(ValidationError):
                validate_non_negative_int(value, "n")

    def test_in_set(self):
        self.assertEqual(validate_in_set(2, {0, 1, 2}, "order"), 2)
        with self.assertRaises(ValidationError) as ctx:
            validate_in_set(5, {0, 1, 2}, "order")
        self.assertIn("0, 1, 2", ctx.exception.message)

    def test_custom_message(self):
        with self.assertRaises(ValidationError) as ctx:
            validate_positive(-2, "alpha", "alpha must be positive for rabi")
        self.assertEqual(ctx.exception.message, "alpha must be positive for rabi")
        self.assertEqual(ctx.exception.field, "alpha")


class TestGridValidation(unittest.TestCase):
    """Test case for time grids and windows."""

    def test_time_grid(self):
        self.assertEqual(validate_time_grid([0, 1, 2.5]), (0.0, 1.0, 2.5))
        for grid in ([], [-1.0, 1.0], [0.0, 1.0, 1.0]):
            with self.assertRaises(ValidationError):
                validate_time_grid(grid)

    def test_window(self):
        self.assertEqual(validate_window((0.0, 4.0), 2.0), (0.0, 4.0))
        with self.assertRaises(ValidationError):
            validate_window((1.0, 2.0), 2.0)
        with self.assertRaises(ValidationError):
            validate_window((0.0,), 1.0)
