"""Main CLI entry point and scenario commands."""
import click

from qdot_bell import __version__
from qdot_bell.commands.bell import bell
from qdot_bell.commands.decohere import decohere
from qdot_bell.commands.dressed import dressed
from qdot_bell.commands.pulse import pulse
from qdot_bell.commands.rabi import rabi
from qdot_bell.utils.log import configure_logging


@click.group()
@click.option("-v", "--verbose", count=True, help="Increase diagnostic output (-v info, -vv debug)")
@click.version_option(__version__, prog_name="qdot-bell")
@click.pass_context
def cli(ctx, verbose):
    """Quantum-dot Bell-state simulator.

    Every scenario takes parameters in absolute units (angular frequencies and
    seconds); defaults reproduce alpha=5, omega=1e15, W=0.1 omega, A=0.4 W.
    Options override a config file given by --config or the QDOT_BELL_CONFIG
    environment variable. Diagnostics go to stderr, data to stdout.
    """
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    configure_logging(verbose)


cli.add_command(dressed)
cli.add_command(rabi)
cli.add_command(bell)
cli.add_command(pulse)
cli.add_command(decohere)

if __name__ == "__main__":
    cli()
