"""Interactive output formatter using Rich."""
from contextlib import contextmanager
from typing import Any, Optional

from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from rich.table import Table

from qdot_bell.presentation.base import OutputFormatter, ScenarioResult, format_number


class InteractiveFormatter(OutputFormatter):
    """Formatter for interactive console output using Rich."""

    def __init__(self):
        """Initialize interactive formatter."""
        self.console = Console()
        self.err_console = Console(stderr=True)

    def output_result(self, result: ScenarioResult) -> None:
        """Output a scenario result as a table with a parameter panel.

        Args:
            result: The result to output
        """
        table = Table(title=f"{result.scenario} ({len(result.rows)} rows)")
        for column in result.columns:
            table.add_column(column, justify="right")
        for row in result.rows:
            table.add_row(*(format_number(value, ".10g") for value in row))

        self.console.print(table)

        if result.parameters:
            params = Table(show_header=False, box=None)
            params.add_column("Parameter", style="bold")
            params.add_column("Value")
            for key, value in result.parameters.items():
                params.add_row(key, str(value))
            self.console.print(params)

        for note in result.notes:
            self.console.print(f"[dim]{note}[/]")

    def output_error(self, error_message: str, details: Optional[Any] = None) -> None:
        """Output an error message on stderr.

        Args:
            error_message: The main error message
            details: Additional error details (optional)
        """
        self.err_console.print(f"[bold red]Error:[/] {error_message}")
        if isinstance(details, dict):
            for key, value in details.items():
                if key != "message" and value is not None:
                    self.err_console.print(f"  [bold]{key}:[/] {value}")

    @contextmanager
    def create_progress(self, description: str, total: Optional[int] = None):
        """Create a transient progress bar on stderr.

        Args:
            description: Description of the task
            total: Total number of steps (optional)

        Returns:
            A progress context manager
        """
        with Progress(
            SpinnerColumn(),
            TextColumn(f"[bold blue]{description}"),
            BarColumn(),
            TextColumn("({task.completed}/{task.total})") if total is not None else TextColumn(""),
            console=self.err_console,
            transient=True,
        ) as progress:
            task = progress.add_task("Working", total=total)
            yield progress, task
