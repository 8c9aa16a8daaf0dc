import click

from mixvol.commands.options import build_config, run_and_exit


@click.group("paper")
def paper():
    """End-to-end reproduction of every verification."""


@paper.command("reproduce")
@click.option("--seed", type=int, default=None)
@click.option("--trials", type=int, default=None)
@click.option("--workers", type=int, default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--no-timestamp", is_flag=True, help="Omit generated_at.")
@click.pass_context
def reproduce(ctx, seed, trials, workers, out, no_timestamp):
    """Run the suite; exit 2 when any check contradicts its expected verdict."""
    config = build_config(
        "reproduce",
        seed=seed,
        trials=trials,
        workers=workers,
        out=out,
        timestamp=not no_timestamp,
    )
    run_and_exit(ctx, config)
