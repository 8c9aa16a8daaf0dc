import json
from typing import Callable

import click
from pydantic import BaseModel

from mixvol.config import settings
from mixvol.schemas.reports import SweepReport
from mixvol.schemas.run_config import RunConfig
from mixvol.services import runner


def sweep_options(f: Callable) -> Callable:
    """--seed/--trials/--tol/--quad/--out/--format/--workers"""
    decorators = [
        click.option("--seed", type=int, default=None, help="Master seed."),
        click.option("--trials", type=int, default=None, help="Number of trials."),
        click.option("--tol", type=float, default=None, help="Equality tolerance."),
        click.option("--quad", "quadrature", default=None, help="Quadrature id."),
        click.option("--out", type=click.Path(dir_okay=False), default=None),
        click.option(
            "--format", "fmt", type=click.Choice(["json", "csv"]), default="json"
        ),
        click.option("--workers", type=int, default=None, help="Worker processes."),
    ]
    for decorator in reversed(decorators):
        f = decorator(f)
    return f


def build_config(command: str, **options) -> RunConfig:
    """RunConfig from CLI options; unset options fall back to the settings"""
    fields = {
        "command": command,
        "seed": options.pop("seed", None),
        "trials": options.pop("trials", None),
        "tol": options.pop("tol", None),
        "quadrature": options.pop("quadrature", None),
        "out": options.pop("out", None),
        "format": options.pop("fmt", "json"),
        "workers": options.pop("workers", None),
        "timestamp": options.pop("timestamp", True),
        "params": options,
    }
    return RunConfig(**{k: v for k, v in fields.items() if v is not None})


def echo_model(model: BaseModel) -> None:
    click.echo(model.model_dump_json(indent=2))


def echo_json(payload) -> None:
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


def run_and_exit(ctx: click.Context, config: RunConfig) -> None:
    code, report = runner.run(config)
    if config.out is None:
        echo_model(report)
    elif isinstance(report, SweepReport):
        click.echo(
            f"{report.name}: {report.trials} trials, verdicts {report.counts} "
            f"-> {config.out}"
        )
    else:
        click.echo(f"{config.command} -> {config.out}")
    ctx.exit(code)


def default_seed(seed):
    return settings.DEFAULT_SEED if seed is None else seed
