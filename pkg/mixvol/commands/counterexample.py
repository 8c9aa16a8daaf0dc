import click

from mixvol.commands.options import build_config, run_and_exit


@click.command("counterexample")
@click.option("--n", "n", type=int, default=3, show_default=True)
@click.option("--eps", type=float, default=0.1, show_default=True)
@click.option("--M", "big_m", type=float, default=400.0, show_default=True)
@click.option("--scan", is_flag=True, help="Search an (eps, M) grid instead.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def counterexample(ctx, n, eps, big_m, scan, out):
    """Truncated prism A with I(A + [0,e_n]) < I(A)."""
    config = build_config("counterexample", n=n, eps=eps, M=big_m, scan=scan, out=out)
    run_and_exit(ctx, config)
