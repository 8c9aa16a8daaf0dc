import click

from mixvol.commands.options import build_config, echo_json, run_and_exit, sweep_options
from mixvol.schemas.matrices import load_mat_args
from mixvol.services.mixed_discriminant import md_incl_excl, md_perm


@click.group("md")
def md():
    """Mixed discriminants of symmetric matrices."""


@md.command("verify")
@click.option("--n", "n", type=int, default=3, show_default=True)
@sweep_options
@click.pass_context
def verify(ctx, n, **options):
    """Seeded sweep of the mixed-discriminant inequality."""
    run_and_exit(ctx, build_config("md_verify", n=n, **options))


@md.command("compute")
@click.option("--args", "args_path", type=click.Path(exists=True), required=True)
@click.option(
    "--method",
    type=click.Choice(["perm", "incl_excl", "grouped"]),
    default="incl_excl",
    show_default=True,
)
def compute(args_path, method):
    """D(A_1[k_1], ..., A_m[k_m]) for matrices read from a JSON file."""
    args = load_mat_args(args_path)
    if method == "perm":
        value = md_perm(args)
    else:
        value = md_incl_excl(args, grouped=method == "grouped")
    echo_json({"n": args.dim, "method": method, "value": value})
