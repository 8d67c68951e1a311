"""Pulse length that leaves the excitons in (|0> - |2>)/sqrt(2)."""
import click

from qdot_bell.commands.options import execute_scenario, provenance, scenario_options
from qdot_bell.models.run_config import RunConfig
from qdot_bell.physics.measurement import solve_pulse_length
from qdot_bell.physics.model import dressed_block
from qdot_bell.presentation.base import OutputFormatter, ScenarioResult

COLUMNS = ("n", "T", "residual_P_plus", "paper_condition_residual", "fidelity", "success_prob")

WINDOW_BEATS = 3


# Implementation functions
def run_pulse(config: RunConfig, formatter: OutputFormatter) -> ScenarioResult:
    """Search [0, tmax] for the pulse length of sector n.

    The automatic window is three beat periods, so the first minimum is found.

    Args:
        config: Resolved run configuration
        formatter: Output formatter used for progress display

    Returns:
        ScenarioResult: A single row
    """
    params = config.model_params()
    period = dressed_block(params, config.n).beat_period
    t_end = config.internal_time(config.tmax) if config.tmax is not None else WINDOW_BEATS * period

    with formatter.create_progress("Searching pulse length...") as (progress, task):
        design = solve_pulse_length(params, config.n, (0.0, t_end))
        if progress is not None and task is not None:
            progress.update(task, advance=1)

    row = (
        design.n,
        config.output_time(design.pulse_length),
        design.residual_p_plus,
        design.paper_condition_residual,
        design.fidelity,
        design.success_prob,
    )
    parameters = provenance(config, tmax_resolved=config.output_time(t_end))
    return ScenarioResult("pulse", COLUMNS, [row], parameters)


# Click command definitions
@click.command()
@scenario_options
@click.pass_context
def pulse(ctx, **options):
    """Pulse length for Bell-state preparation in sector n."""
    execute_scenario(ctx, "pulse", options, run_pulse)
