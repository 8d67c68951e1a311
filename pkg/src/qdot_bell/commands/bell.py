"""Bell-component populations after detecting n+1 photons."""
import click

from qdot_bell.commands.options import execute_scenario, provenance, scenario_options, time_grid
from qdot_bell.models.run_config import RunConfig
from qdot_bell.physics.measurement import bell_series
from qdot_bell.physics.model import dressed_block
from qdot_bell.presentation.base import OutputFormatter, ScenarioResult

COLUMNS = ("t", "P_plus", "P_minus", "ratio")

BEATS = 4
SAMPLES_PER_BEAT = 100


# Implementation functions
def run_bell(config: RunConfig, formatter: OutputFormatter) -> ScenarioResult:
    """Sample P+, P- and P+/P- for sector n starting from |0,n+1>.

    The automatic window covers four beat periods 2 pi / Omega at 100 samples
    per period.

    Args:
        config: Resolved run configuration
        formatter: Output formatter (unused, no progress is shown)

    Returns:
        ScenarioResult: t_steps + 1 rows
    """
    params = config.model_params()
    block = dressed_block(params, config.n)
    period = block.beat_period
    times = time_grid(config, BEATS * period, period / SAMPLES_PER_BEAT)

    p_plus, p_minus, ratio = bell_series(params, config.n, times)
    rows = [
        (config.output_time(t), plus, minus, r)
        for t, plus, minus, r in zip(times, p_plus, p_minus, ratio)
    ]
    parameters = provenance(
        config,
        tmax_resolved=config.output_time(float(times[-1])),
        steps_resolved=times.size - 1,
    )
    return ScenarioResult("bell", COLUMNS, rows, parameters)


# Click command definitions
@click.command()
@scenario_options
@click.pass_context
def bell(ctx, **options):
    """Bell-state populations P+, P- and their ratio."""
    execute_scenario(ctx, "bell", options, run_bell)
