"""JSON output formatter."""
import json
import math
from contextlib import contextmanager
from typing import Any, Optional

import click
import numpy as np

from qdot_bell.presentation.base import OutputFormatter, ScenarioResult


class JsonFormatter(OutputFormatter):
    """Formatter for JSON output."""

    def __init__(self, output_file: Optional[str] = None):
        """Initialize JSON formatter.

        Args:
            output_file: Optional file path to write JSON output to
        """
        self.output_file = output_file

    def output_result(self, result: ScenarioResult) -> None:
        """Output a scenario result as JSON.

        Args:
            result: The result to output
        """
        text = json.dumps(self._prepare_data(result), indent=2) + "\n"
        if self.output_file:
            with open(self.output_file, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        else:
            click.echo(text, nl=False)

    def output_error(self, error_message: str, details: Optional[Any] = None) -> None:
        """Output an error message as JSON on stderr.

        Args:
            error_message: The main error message
            details: Additional error details (optional)
        """
        error_data = {
            "success": False,
            "message": error_message
        }

        if details:
            error_data["error_details"] = self._prepare_data(details)

        click.echo(json.dumps(error_data, indent=2), err=True)

    @contextmanager
    def create_progress(self, description: str, total: Optional[int] = None):
        """No progress display in JSON mode."""
        yield None, None

    def _prepare_data(self, data: Any) -> Any:
        """Prepare data for JSON serialization.

        Non-finite floats become strings and complex numbers [re, im] pairs.

        Args:
            data: The data to prepare

        Returns:
            JSON-serializable data
        """
        if hasattr(data, "to_dict"):
            return self._prepare_data(data.to_dict())

        if isinstance(data, (list, tuple, np.ndarray)):
            return [self._prepare_data(item) for item in data]

        if isinstance(data, dict):
            return {str(k): self._prepare_data(v) for k, v in data.items()}

        if isinstance(data, (complex, np.complexfloating)):
            return [self._prepare_data(data.real), self._prepare_data(data.imag)]

        if isinstance(data, (np.integer,)):
            return int(data)

        if isinstance(data, (float, np.floating)):
            value = float(data)
            return value if math.isfinite(value) else str(value)

        return data
