"""One-exciton population under a coherent laser field, with collapse and revival."""
import logging
import math

import click

from qdot_bell.commands.options import execute_scenario, provenance, scenario_options, time_grid
from qdot_bell.models.run_config import RunConfig
from qdot_bell.physics.dynamics import (
    SAMPLES_PER_PERIOD,
    collapse_metrics,
    exciton_population,
    mean_rabi_period,
    revival_time_estimate,
    shortest_rabi_period,
)
from qdot_bell.physics.model import check_dark_regime
from qdot_bell.presentation.base import OutputFormatter, ScenarioResult
from qdot_bell.utils.errors import ValidationError
from qdot_bell.utils.validation import validate_positive

logger = logging.getLogger(__name__)

COLUMNS = ("t", "P1")

# Laser periods covered when there is no revival to wait for
UNDRIVEN_SPAN = 50.0 * 2.0 * math.pi


# Implementation functions
def run_rabi(config: RunConfig, formatter: OutputFormatter) -> ScenarioResult:
    """Sample P1(t) and report collapse and revival times.

    The automatic window is 1.5 times the revival estimate, sampled with at
    least 40 points per shortest Rabi period.

    Args:
        config: Resolved run configuration
        formatter: Output formatter used for progress display

    Returns:
        ScenarioResult: t_steps + 1 rows of (t, P1)
    """
    validate_positive(config.alpha, "alpha")
    params = config.model_params()
    check_dark_regime(params)

    revival = revival_time_estimate(params)
    shortest = shortest_rabi_period(params)
    auto_t_max = 1.5 * revival if math.isfinite(revival) else UNDRIVEN_SPAN
    auto_step = shortest / SAMPLES_PER_PERIOD if math.isfinite(shortest) else auto_t_max / 1000
    times = time_grid(config, auto_t_max, auto_step)

    with formatter.create_progress("Averaging over photon sectors...") as (progress, task):
        population = exciton_population(params, times)
        if progress is not None and task is not None:
            progress.update(task, advance=1)

    notes = []
    window = mean_rabi_period(params)
    try:
        metrics = collapse_metrics(times, population, window, shortest)
    except ValidationError as e:
        logger.warning("collapse metrics skipped: %s", e.message)
    else:
        logger.info(
            "t_collapse=%s t_revival=%s (internal units)", metrics.t_collapse, metrics.t_revival
        )
        notes.append(
            "t_collapse = {}, t_revival = {}".format(
                _output_or_none(config, metrics.t_collapse), _output_or_none(config, metrics.t_revival)
            )
        )

    rows = [(config.output_time(t), p) for t, p in zip(times, population)]
    parameters = provenance(
        config,
        nmax_resolved=params.resolved_n_max,
        tmax_resolved=config.output_time(float(times[-1])),
        steps_resolved=times.size - 1,
    )
    return ScenarioResult("rabi", COLUMNS, rows, parameters, notes)


def _output_or_none(config: RunConfig, t):
    return "none" if t is None else format(config.output_time(t), ".16e")


# Click command definitions
@click.command()
@scenario_options
@click.pass_context
def rabi(ctx, **options):
    """Collapse and revival of the one-exciton population."""
    execute_scenario(ctx, "rabi", options, run_rabi)
