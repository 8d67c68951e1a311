"""Factory for creating output formatters."""
from typing import Optional

from qdot_bell.presentation.base import OutputFormatter
from qdot_bell.presentation.csv_output import CsvFormatter
from qdot_bell.presentation.interactive import InteractiveFormatter
from qdot_bell.presentation.json_output import JsonFormatter
from qdot_bell.presentation.markdown import MarkdownFormatter


def create_formatter(output_format: str, output_file: Optional[str] = None) -> OutputFormatter:
    """Create an output formatter based on the specified format.

    Args:
        output_format: The desired output format ("csv", "table", "json" or "markdown")
        output_file: Optional file path to write output to (ignored by "table")

    Returns:
        OutputFormatter: The appropriate formatter

    Raises:
        ValueError: If the output format is not supported
    """
    if output_format == "csv":
        return CsvFormatter(output_file=output_file)
    elif output_format == "json":
        return JsonFormatter(output_file=output_file)
    elif output_format in ("table", "interactive"):
        return InteractiveFormatter()
    elif output_format == "markdown":
        return MarkdownFormatter(output_file=output_file)
    else:
        raise ValueError(f"Unsupported output format: {output_format}")
