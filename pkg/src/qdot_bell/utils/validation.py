"""Validation utilities for numerical inputs."""
import math
from typing import Optional, Sequence, Set, Tuple, TypeVar

from qdot_bell.utils.errors import ValidationError

T = TypeVar('T')  # Generic type for values being validated


def validate_finite(
    value: float,
    name: str,
    custom_message: Optional[str] = None
) -> float:
    """Validate that a value is a finite real number.

    Args:
        value: Value to validate
        name: Name of the value (for error messages)
        custom_message: Optional custom error message

    Returns:
        float: The validated value

    Raises:
        ValidationError: If validation fails
    """
    if value is None or not math.isfinite(float(value)):
        message = custom_message or f"{name} must be a finite number"
        raise ValidationError(message, field=name, value=value)
    return float(value)


def validate_non_negative(
    value: float,
    name: str,
    custom_message: Optional[str] = None
) -> float:
    """Validate that a value is finite and >= 0.

    Args:
        value: Value to validate
        name: Name of the value (for error messages)
        custom_message: Optional custom error message

    Returns:
        float: The validated value

    Raises:
        ValidationError: If validation fails
    """
    value = validate_finite(value, name, custom_message)
    if value < 0:
        message = custom_message or f"{name} must be non-negative"
        raise ValidationError(message, field=name, value=value)
    return value


def validate_positive(
    value: float,
    name: str,
    custom_message: Optional[str] = None
) -> float:
    """Validate that a value is finite and strictly positive.

    Args:
        value: Value to validate
        name: Name of the value (for error messages)
        custom_message: Optional custom error message

    Returns:
        float: The validated value

    Raises:
        ValidationError: If validation fails
    """
    value = validate_finite(value, name, custom_message)
    if value <= 0:
        message = custom_message or f"{name} must be positive"
        raise ValidationError(message, field=name, value=value)
    return value


def validate_non_negative_int(
    value: int,
    name: str,
    custom_message: Optional[str] = None
) -> int:
    """Validate that a value is an integer >= 0.

    Args:
        value: Value to validate
        name: Name of the value (for error messages)
        custom_message: Optional custom error message

    Returns:
        int: The validated value

    Raises:
        ValidationError: If validation fails
    """
    if isinstance(value, bool) or int(value) != value or value < 0:
        message = custom_message or f"{name} must be a non-negative integer"
        raise ValidationError(message, field=name, value=value)
    return int(value)


def validate_in_set(
    value: T,
    valid_values: Set[T],
    name: str,
    custom_message: Optional[str] = None
) -> T:
    """Validate that a value is in a set of valid values.

    Args:
        value: Value to validate
        valid_values: Set of valid values
        name: Name of the value (for error messages)
        custom_message: Optional custom error message

    Returns:
        T: The validated value

    Raises:
        ValidationError: If validation fails
    """
    if value not in valid_values:
        valid_str = ", ".join(str(v) for v in sorted(valid_values, key=str))
        message = custom_message or f"{name} must be one of: {valid_str}"
        raise ValidationError(message, field=name, value=value)
    return value


def validate_time_grid(
    t_grid: Sequence[float],
    name: str = "t_grid"
) -> Tuple[float, ...]:
    """Validate that a time grid is non-empty, non-negative and increasing.

    Args:
        t_grid: Sampled times
        name: Name of the value (for error messages)

    Returns:
        Tuple[float, ...]: The validated grid

    Raises:
        ValidationError: If validation fails
    """
    grid = tuple(float(t) for t in t_grid)
    if not grid:
        raise ValidationError(f"{name} cannot be empty", field=name)
    if grid[0] < 0:
        raise ValidationError(f"{name} must start at t >= 0", field=name, value=grid[0])
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValidationError(f"{name} must be strictly increasing", field=name)
    return grid


def validate_window(
    window: Sequence[float],
    min_span: float,
    name: str = "t_window"
) -> Tuple[float, float]:
    """Validate a (start, end) time window spanning at least min_span.

    Args:
        window: Two-element (start, end) sequence
        min_span: Minimum required end - start
        name: Name of the value (for error messages)

    Returns:
        Tuple[float, float]: The validated window

    Raises:
        ValidationError: If validation fails
    """
    if len(window) != 2:
        raise ValidationError(f"{name} must be a (start, end) pair", field=name, value=window)
    start = validate_non_negative(window[0], f"{name} start")
    end = validate_positive(window[1], f"{name} end")
    if end - start < min_span:
        raise ValidationError(
            f"{name} must span at least {min_span:.6g} (got {end - start:.6g})",
            field=name,
            value=(start, end),
        )
    return start, end
