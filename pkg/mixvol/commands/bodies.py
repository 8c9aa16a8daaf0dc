from pathlib import Path

import click

from mixvol.commands.options import default_seed, echo_model
from mixvol.errors import UndefinedValueError
from mixvol.schemas.bodies import BodySummary, body_to_schema, load_body
from mixvol.services.bodies import (
    Body,
    TruncatedPrism,
    disk_polygon,
    icosphere_polytope,
    random_body,
    unit_cube,
)
from mixvol.services.mixed_volume import info

RANDOM_KINDS = ("polytope", "zonotope", "segment", "ball")
KINDS = RANDOM_KINDS + ("cube", "disk", "icosphere", "truncated_prism")


def summarize(K: Body) -> BodySummary:
    try:
        value = info(K)
    except UndefinedValueError:
        value = None
    return BodySummary(
        kind=K.kind,
        dim=K.dim,
        affine_dim=K.affine_dimension(),
        volume=K.volume(),
        surface_area=K.surface_area(),
        info=value,
        body=body_to_schema(K),
    )


@click.group("bodies")
def bodies():
    """Build and inspect convex bodies stored as JSON."""


@bodies.command("make")
@click.argument("kind", type=click.Choice(KINDS))
@click.option("--dim", type=int, default=3, show_default=True)
@click.option("--size", type=int, default=8, help="Points or generators.")
@click.option("--seed", type=int, default=None)
@click.option("--radius", type=float, default=1.0, show_default=True)
@click.option("--sides", type=int, default=None, help="Sides of the disk polygon.")
@click.option("--level", type=int, default=2, help="Icosphere subdivision level.")
@click.option("--eps", type=float, default=0.1, show_default=True)
@click.option("--M", "big_m", type=float, default=400.0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def make(kind, dim, size, seed, radius, sides, level, eps, big_m, out):
    """Write a body of KIND as JSON."""
    if kind in RANDOM_KINDS:
        K = random_body(kind, dim, size, default_seed(seed))
    elif kind == "cube":
        K = unit_cube(dim)
    elif kind == "disk":
        K = disk_polygon(sides, radius)
    elif kind == "icosphere":
        K = icosphere_polytope(level, radius)
    else:
        K = TruncatedPrism(dim, eps, big_m)
    payload = body_to_schema(K).model_dump_json(indent=2)
    if out is None:
        click.echo(payload)
    else:
        Path(out).write_text(payload)
        click.echo(f"{K.kind} (dim {K.dim}) -> {out}")


@bodies.command("show")
@click.option("--body", "body_path", type=click.Path(exists=True), required=True)
def show(body_path):
    """Volume, surface area and I(K) of a stored body."""
    echo_model(summarize(load_body(body_path)))
