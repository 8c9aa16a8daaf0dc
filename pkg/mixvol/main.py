# mixvol/main.py
import logging
import sys

import click
from pydantic import ValidationError

from mixvol import __version__
from mixvol.commands import bodies, counterexample, harmonics, ineq, md, mv, paper
from mixvol.config import settings
from mixvol.errors import MixvolError
from mixvol.services.runner import EXIT_CONFIG


class MixvolGroup(click.Group):
    """Root group: every failure before a verdict exits with code 1"""

    def main(self, args=None, prog_name=None, standalone_mode=True, **extra):
        try:
            rv = super().main(
                args=args, prog_name=prog_name, standalone_mode=False, **extra
            )
            code = rv if isinstance(rv, int) else 0
        except click.ClickException as e:
            e.show()
            code = EXIT_CONFIG
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_CONFIG
        except (MixvolError, ValidationError, ValueError) as e:
            click.echo(f"Error: {e}", err=True)
            code = EXIT_CONFIG
        if standalone_mode:
            sys.exit(code)
        return code


@click.group(cls=MixvolGroup)
@click.version_option(__version__, prog_name=settings.ARTIFACT_NAME)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Overrides LOG_LEVEL.",
)
def cli(log_level):
    """Mixed discriminants, mixed volumes and the inequalities between them."""
    # Configuration des logs sur stderr
    logging.basicConfig(
        level=(log_level or settings.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


# Enregistrement des groupes de commandes
cli.add_command(md.md)
cli.add_command(bodies.bodies)
cli.add_command(mv.mv)
cli.add_command(ineq.ineq)
cli.add_command(counterexample.counterexample)
cli.add_command(harmonics.harmonics)
cli.add_command(paper.paper)
