"""CSV output formatter for plot-ready scenario tables."""
from contextlib import contextmanager
from typing import Any, Optional

import click

from qdot_bell.presentation.base import OutputFormatter, ScenarioResult, format_number


class CsvFormatter(OutputFormatter):
    """Formatter for deterministic CSV output.

    The first line is the header, followed by ``# key = value`` provenance
    lines and the data rows. Lines end with LF.
    """

    def __init__(self, output_file: Optional[str] = None):
        """Initialize CSV formatter.

        Args:
            output_file: Optional file path to write CSV output to
        """
        self.output_file = output_file

    def output_result(self, result: ScenarioResult) -> None:
        """Output a scenario result as CSV.

        Args:
            result: The result to output
        """
        lines = [",".join(result.columns)]
        lines.extend(f"# {key} = {value}" for key, value in result.parameters.items())
        lines.extend(",".join(format_number(value) for value in row) for row in result.rows)
        self._write("\n".join(lines) + "\n")

    def output_error(self, error_message: str, details: Optional[Any] = None) -> None:
        """Output an error message on stderr.

        Args:
            error_message: The main error message
            details: Additional error details (optional)
        """
        click.echo(f"Error: {error_message}", err=True)
        if isinstance(details, dict):
            for key, value in details.items():
                if key != "message" and value is not None:
                    click.echo(f"  {key}: {value}", err=True)

    @contextmanager
    def create_progress(self, description: str, total: Optional[int] = None):
        """No progress display; stdout carries data only."""
        yield None, None

    def _write(self, text: str) -> None:
        if self.output_file:
            with open(self.output_file, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        else:
            click.echo(text, nl=False)
