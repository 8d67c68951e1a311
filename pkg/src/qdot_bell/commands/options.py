"""Shared click options and the run wrapper used by every scenario command."""
import logging
import math
from typing import Callable, Dict, Optional

import click
import numpy as np

from qdot_bell.models.run_config import FORMATS, UNITS, RunConfig, format_value
from qdot_bell.presentation.base import OutputFormatter, ScenarioResult
from qdot_bell.presentation.factory import create_formatter
from qdot_bell.utils.config import load_config, merge_config
from qdot_bell.utils.errors import ErrorHandler, QDotBellError, ValidationError, handle_error
from qdot_bell.utils.validation import validate_positive

logger = logging.getLogger(__name__)

Runner = Callable[[RunConfig, OutputFormatter], ScenarioResult]


def scenario_options(func):
    """Attach the model, grid and output options shared by all scenarios."""
    options = [
        click.option("--alpha", type=float, help="Coherent amplitude of the laser mode (default 5)"),
        click.option("--omega", type=float, help="Laser angular frequency (default 1e15)"),
        click.option("--w", type=float, help="Interdot interaction W (default 1e14)"),
        click.option("--a", type=float, help="Exciton-photon coupling A (default 4e13)"),
        click.option("--gamma", type=float, help="Dephasing rate Gamma (default 0)"),
        click.option("--e", type=float, help="Exciton energy e (default 0)"),
        click.option("--detuning", type=float, help="E1 - E0 in the E0 = E2 regime (default 0)"),
        click.option("--bare/--no-bare", default=None, help="Use the bare level formulas without the E0 = E2 placement"),
        click.option("--n", type=int, help="Photon sector n (default 10)"),
        click.option("--nmax", help="Fock truncation, or 'auto'"),
        click.option("--tmax", help="End of the time grid in seconds, or 'auto'"),
        click.option("--steps", help="Number of grid steps, or 'auto'"),
        click.option("--order", type=click.Choice(["1", "2"]), help="Perturbative order for decohere (default 1)"),
        click.option("--config", "config_path", type=click.Path(dir_okay=False), help="Config file (key = value, or YAML)"),
        click.option("--out", help="Write output to this file instead of stdout"),
        click.option("--units", type=click.Choice(UNITS), help="Reporting units (default absolute)"),
        click.option("--format", "output_format", type=click.Choice(FORMATS), help="Output format (default csv)"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def resolve_run_config(scenario: str, options: Dict) -> RunConfig:
    """Build the run configuration: command line over config file over defaults.

    Raises:
        ConfigurationError: If the config file or a value is invalid
    """
    options = dict(options)
    config_path = options.pop("config_path", None)
    options["format"] = options.pop("output_format", None)

    defaults = {key: value for key, value in RunConfig().to_dict().items() if value is not None}
    merged = merge_config(defaults, load_config(config_path), options)
    merged["scenario"] = scenario
    return RunConfig.from_dict(merged)


def provenance(config: RunConfig, **resolved) -> Dict[str, str]:
    """Resolved parameter set for the output header, in a fixed order."""
    parameters = {key: format_value(value) for key, value in config.to_dict().items() if key not in ("format", "out")}
    parameters.update({key: format_value(value) for key, value in resolved.items()})
    return parameters


def time_grid(config: RunConfig, auto_t_max: float, auto_step: float) -> np.ndarray:
    """Internal time grid 0..t_max with t_steps + 1 points.

    An explicit tmax (seconds) overrides ``auto_t_max``; an explicit step count
    overrides the count derived from ``auto_step``.
    """
    t_max = config.internal_time(config.tmax) if config.tmax is not None else auto_t_max
    validate_positive(t_max, "tmax")
    if config.steps is not None:
        if config.steps < 1:
            raise ValidationError("steps must be at least 1", field="steps", value=config.steps)
        steps = config.steps
    else:
        steps = max(1, int(math.ceil(t_max / auto_step - 1e-9)))
    return np.linspace(0.0, t_max, steps + 1)


def execute_scenario(ctx: click.Context, scenario: str, options: Dict, runner: Runner) -> None:
    """Resolve the config, run the scenario and exit with the mapped status code."""
    formatter: Optional[OutputFormatter] = None
    try:
        config = resolve_run_config(scenario, options)
        formatter = create_formatter(config.format, config.out)
        logger.info("running %s with %s", scenario, config.to_dict())
        result = runner(config, formatter)
        formatter.output_result(result)
    except Exception as e:
        error = handle_error(e)
        if not isinstance(e, QDotBellError):
            logger.debug("unexpected failure in %s", scenario, exc_info=e)
        formatter = formatter or create_formatter("csv")
        formatter.output_error(
            f"{scenario} failed: {error.message}", ErrorHandler.format_error_for_display(error)
        )
        ctx.exit(ErrorHandler.exit_code(error))

