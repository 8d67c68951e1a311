"""Dressed eigensystem of every photon sector."""
import click

from qdot_bell.commands.options import execute_scenario, provenance, scenario_options
from qdot_bell.models.run_config import RunConfig
from qdot_bell.physics.model import dressed_block
from qdot_bell.presentation.base import OutputFormatter, ScenarioResult

COLUMNS = ("n", "theta", "Omega", "E_d", "E_plus", "E_minus")


# Implementation functions
def run_dressed(config: RunConfig, formatter: OutputFormatter) -> ScenarioResult:
    """Tabulate (n, theta, Omega, E_d, E+, E-) for n = 0..n_max-1.

    Args:
        config: Resolved run configuration
        formatter: Output formatter (unused, no progress is shown)

    Returns:
        ScenarioResult: One row per sector
    """
    params = config.model_params()
    n_max = params.resolved_n_max

    rows = []
    for n in range(n_max):
        block = dressed_block(params, n)
        rows.append((
            n,
            block.theta,
            config.output_energy(block.rabi_frequency),
            config.output_energy(block.e_dark),
            config.output_energy(block.e_plus),
            config.output_energy(block.e_minus),
        ))

    return ScenarioResult("dressed", COLUMNS, rows, provenance(config, nmax_resolved=n_max))


# Click command definitions
@click.command()
@scenario_options
@click.pass_context
def dressed(ctx, **options):
    """Dressed energies and mixing angle per photon sector."""
    execute_scenario(ctx, "dressed", options, run_dressed)
