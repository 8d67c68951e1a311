"""Bell populations under pure dephasing: exact master equation against the small-loss series."""
import click
import numpy as np

from qdot_bell.commands.options import execute_scenario, provenance, scenario_options, time_grid
from qdot_bell.models.run_config import RunConfig
from qdot_bell.physics.decoherence import (
    DynamicalSystem,
    bell_populations,
    expanded_state,
    integrate_master,
    perturbative_hierarchy,
    sector_initial_state,
)
from qdot_bell.physics.model import dressed_block
from qdot_bell.presentation.base import OutputFormatter, ScenarioResult

COLUMNS = ("t", "P_plus", "P_minus", "P_minus_perturbative", "trace_err")

# Gamma t reached by the automatic window
DECAY_SPAN = 0.1
UNDAMPED_BEATS = 10
STEPS = 200


# Implementation functions
def run_decohere(config: RunConfig, formatter: OutputFormatter) -> ScenarioResult:
    """Integrate sector n from |0,n+1> and compare P- with the expansion to ``order``.

    The automatic window ends at Gamma t = 0.1 (ten beat periods when Gamma = 0)
    and is split into 200 steps.

    Args:
        config: Resolved run configuration
        formatter: Output formatter used for progress display

    Returns:
        ScenarioResult: t_steps + 1 rows
    """
    params = config.model_params()
    n = config.n
    if params.gamma > 0:
        auto_t_max = DECAY_SPAN / params.gamma
    else:
        auto_t_max = UNDAMPED_BEATS * dressed_block(params, n).beat_period
    times = time_grid(config, auto_t_max, auto_t_max / STEPS)

    system = DynamicalSystem.for_sector(params, n)
    rho0 = sector_initial_state()

    with formatter.create_progress("Integrating master equation...", total=2) as (progress, task):
        trajectory = integrate_master(params, rho0, times, system=system)
        if progress is not None and task is not None:
            progress.update(task, advance=1)
        series = perturbative_hierarchy(params, rho0, times, order=config.order, system=system)
        if progress is not None and task is not None:
            progress.update(task, advance=1)

    p_plus, p_minus = bell_populations(trajectory.states, n + 1, system)
    _, p_minus_series = bell_populations(expanded_state(series, params.gamma), n + 1, system)

    rows = [
        (config.output_time(t), plus, minus, approx, err)
        for t, plus, minus, approx, err in zip(
            times, p_plus, p_minus, p_minus_series, trajectory.trace_errors
        )
    ]
    notes = [f"max |P_minus - P_minus_perturbative| = {float(np.max(np.abs(p_minus - p_minus_series))):.3e}"]
    parameters = provenance(
        config,
        tmax_resolved=config.output_time(float(times[-1])),
        steps_resolved=times.size - 1,
    )
    return ScenarioResult("decohere", COLUMNS, rows, parameters, notes)


# Click command definitions
@click.command()
@scenario_options
@click.pass_context
def decohere(ctx, **options):
    """Bell-population decay under pure dephasing."""
    execute_scenario(ctx, "decohere", options, run_decohere)
