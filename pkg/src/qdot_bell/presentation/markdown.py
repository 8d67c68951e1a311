"""Markdown output formatter for scenario reports."""
from contextlib import contextmanager
from typing import Any, List, Optional

import click
from tabulate import tabulate

from qdot_bell.presentation.base import OutputFormatter, ScenarioResult, format_number


class MarkdownFormatter(OutputFormatter):
    """Formatter for markdown output, primarily for reports."""

    def __init__(self, output_file: Optional[str] = None):
        """Initialize markdown formatter.

        Args:
            output_file: Optional file path to write markdown output to
        """
        self.output_file = output_file
        self.buffer: List[str] = []

    def output_result(self, result: ScenarioResult) -> None:
        """Output a scenario result in markdown format.

        Args:
            result: The result to output
        """
        self.buffer = [f"# Scenario: {result.scenario}\n"]

        if result.parameters:
            self.buffer.append("## Parameters\n")
            self.buffer.extend(f"- **{key}**: {value}" for key, value in result.parameters.items())
            self.buffer.append("")

        self.buffer.append("## Results\n")
        rows = [[format_number(value) for value in row] for row in result.rows]
        self.buffer.append(tabulate(rows, headers=result.columns, tablefmt="github", disable_numparse=True))

        if result.notes:
            self.buffer.append("")
            self.buffer.extend(f"> {note}" for note in result.notes)

        self._write_output()

    def output_error(self, error_message: str, details: Optional[Any] = None) -> None:
        """Output an error message in markdown format on stderr.

        Args:
            error_message: The main error message
            details: Additional error details (optional)
        """
        lines = [f"# Error: {error_message}\n"]
        if isinstance(details, dict):
            lines.append("## Details\n")
            lines.extend(f"- **{key}**: {value}" for key, value in details.items() if value is not None)
        click.echo("\n".join(lines), err=True)

    @contextmanager
    def create_progress(self, description: str, total: Optional[int] = None):
        """No progress display in markdown mode."""
        yield None, None

    def _write_output(self) -> None:
        """Write buffered markdown to the output file or stdout."""
        text = "\n".join(self.buffer) + "\n"
        if self.output_file:
            with open(self.output_file, "w", encoding="utf-8", newline="\n") as f:
                f.write(text)
        else:
            click.echo(text, nl=False)
