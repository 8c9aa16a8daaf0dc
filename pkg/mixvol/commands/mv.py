import click

from mixvol.commands.options import echo_json, echo_model
from mixvol.schemas.bodies import load_body, load_body_args
from mixvol.services.mixed_volume import (
    first_variation,
    info,
    mixed_volume,
    mstar,
    mstar_planar,
)

body_option = click.option(
    "--body", "body_path", type=click.Path(exists=True), required=True
)
quad_option = click.option("--quad", "quadrature", default=None, help="Quadrature id.")


@click.group("mv")
def mv():
    """Mixed volumes, mean widths and the isoperimetric ratio I(K)."""


@mv.command("compute")
@click.option("--args", "args_path", type=click.Path(exists=True), required=True)
@quad_option
def compute(args_path, quadrature):
    """V(K_1[k_1], ..., K_m[k_m]) for bodies read from a JSON file."""
    args = load_body_args(args_path)
    echo_json({"n": args.dim, "value": mixed_volume(args, quadrature)})


@mv.command("mstar")
@body_option
@quad_option
def mean_width(body_path, quadrature):
    """Mean half-width M*(K)."""
    K = load_body(body_path)
    value = mstar_planar(K) if K.dim == 2 else mstar(K, quadrature)
    echo_json({"dim": K.dim, "mstar": value})


@mv.command("info")
@body_option
def isoperimetric(body_path):
    """I(K) = |K| / |∂K|."""
    echo_json({"info": info(load_body(body_path))})


@mv.command("variation")
@click.option("--A", "a_path", type=click.Path(exists=True), required=True)
@click.option("--T", "t_path", type=click.Path(exists=True), required=True)
@quad_option
def variation(a_path, t_path, quadrature):
    """Derivative at 0 of λ ↦ I(A + λT)."""
    echo_model(first_variation(load_body(a_path), load_body(t_path), quadrature))
