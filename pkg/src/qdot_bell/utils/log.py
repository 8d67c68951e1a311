"""Logging setup routing diagnostics to stderr through rich."""
import logging

from rich.console import Console
from rich.logging import RichHandler

_HANDLER_NAME = "qdot_bell.rich"


def configure_logging(verbosity: int = 0) -> logging.Logger:
    """Install a single stderr RichHandler on the package logger.

    Args:
        verbosity: 0 for warnings, 1 for info, 2 or more for debug

    Returns:
        logging.Logger: The configured package logger
    """
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    logger = logging.getLogger("qdot_bell")
    logger.setLevel(level)

    if not any(h.get_name() == _HANDLER_NAME for h in logger.handlers):
        handler = RichHandler(
            console=Console(stderr=True),
            show_time=False,
            show_path=False,
            markup=False,
        )
        handler.set_name(_HANDLER_NAME)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)

    return logger
