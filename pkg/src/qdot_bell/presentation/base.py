"""Base classes for output formatting."""
import math
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence

import numpy as np


def format_number(value: Any, spec: str = ".16e") -> str:
    """Locale-independent text for a table cell.

    Floats use ``spec`` (17 significant digits by default); infinities print
    as ``inf`` and missing values as an empty cell.
    """
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return format(value, spec)
    return str(value)


class OutputFormatter(ABC):
    """Abstract base class for output formatters."""

    @abstractmethod
    def output_result(self, result: "ScenarioResult") -> None:
        """Output a scenario result.

        Args:
            result: The result to output
        """
        pass

    @abstractmethod
    def output_error(self, error_message: str, details: Optional[Any] = None) -> None:
        """Output an error message to the user.

        Args:
            error_message: The main error message
            details: Additional error details (optional)
        """
        pass

    @abstractmethod
    def create_progress(self, description: str, total: Optional[int] = None):
        """Create a progress indicator.

        Args:
            description: Description of the task
            total: Total number of steps (optional)

        Returns:
            A progress context manager yielding (progress, task)
        """
        pass


class ScenarioResult:
    """Tabular result of a scenario run with its provenance."""

    def __init__(
        self,
        scenario: str,
        columns: Sequence[str],
        rows: List[Sequence[Any]],
        parameters: Optional[Dict[str, str]] = None,
        notes: Optional[List[str]] = None,
    ):
        """Initialize a scenario result.

        Args:
            scenario: Scenario name
            columns: Column names, in output order
            rows: Table rows, one value per column
            parameters: Resolved parameter set written as provenance
            notes: Free-text remarks (collapse metrics, residuals)
        """
        self.scenario = scenario
        self.columns = list(columns)
        self.rows = rows
        self.parameters = parameters or {}
        self.notes = notes or []

    def records(self) -> List[Dict[str, Any]]:
        """Rows as dictionaries keyed by column name."""
        return [dict(zip(self.columns, row)) for row in self.rows]

    def to_dict(self) -> Dict:
        """Convert result to a dictionary.

        Returns:
            Dict: Dictionary representation of result
        """
        result = {
            "scenario": self.scenario,
            "parameters": self.parameters,
            "columns": self.columns,
            "rows": self.records(),
        }

        if self.notes:
            result["notes"] = self.notes

        return result
