import click

from mixvol.commands.options import default_seed, echo_json, echo_model
from mixvol.schemas.bodies import load_body
from mixvol.services import harmonics as sh
from mixvol.services.mixed_volume import mv_with_ball
from mixvol.services.reports import write_json, write_rows_csv

lmax_option = click.option("--lmax", type=int, default=None, help="Truncation degree.")
quad_option = click.option("--quad", "quadrature", default=None, help="Quadrature id.")


def _bodies(k_path, t_path, random_smooth):
    """(K, T) from body files, or two seeded random smooth bodies"""
    if random_smooth is not None:
        rng_seed = default_seed(random_smooth)
        return (
            sh.random_smooth_body(seed=rng_seed),
            sh.random_smooth_body(seed=rng_seed + 1),
        )
    if k_path is None or t_path is None:
        raise click.UsageError("give --K and --T, or --random-smooth SEED")
    return load_body(k_path), load_body(t_path)


def pair_options(f):
    f = click.option(
        "--random-smooth", type=int, default=None, help="Seed for smooth K and T."
    )(f)
    f = click.option("--T", "t_path", type=click.Path(exists=True), default=None)(f)
    return click.option("--K", "k_path", type=click.Path(exists=True), default=None)(f)


@click.group("harmonics")
def harmonics():
    """Spherical-harmonic expansions of support functions on S^2."""


@harmonics.command("expand")
@click.option("--body", "body_path", type=click.Path(exists=True), required=True)
@lmax_option
@quad_option
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def expand(body_path, lmax, quadrature, fmt, out):
    """Coefficients k_{m,l} of h_K."""
    expansion = sh.expand_support(load_body(body_path), lmax, quadrature).to_schema()
    if out is None:
        echo_model(expansion)
    elif fmt == "csv":
        rows = [(c.m, c.l, repr(c.value)) for c in expansion.coefficients]
        write_rows_csv(("m", "l", "value"), rows, out)
    else:
        write_json(expansion, out)


@harmonics.command("mv")
@pair_options
@lmax_option
@quad_option
def spectral_mv(k_path, t_path, random_smooth, lmax, quadrature):
    """V(K,T,B) from the expansions, next to the direct value when available."""
    K, T = _bodies(k_path, t_path, random_smooth)
    spectral = sh.mv_spectral(K, T, lmax, quadrature)
    payload = {"spectral": spectral}
    if random_smooth is None:
        direct = mv_with_ball(K, T)
        payload["direct"] = direct
        gap = abs(spectral - direct)
        payload["relative_difference"] = gap / max(abs(direct), 1e-300)
    echo_json(payload)


@harmonics.command("conjecture")
@pair_options
@lmax_option
@quad_option
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def conjecture(k_path, t_path, random_smooth, lmax, quadrature, out):
    """Spectral inequality k_00·t_00 >= D_3·Σ_m (...), truncated at lmax."""
    report = sh.conjecture_check(
        *_bodies(k_path, t_path, random_smooth), lmax, quadrature
    )
    echo_model(report)
    if out is not None:
        write_json(report, out)


@harmonics.command("constants")
@click.option("--n", "n", type=int, default=None, help="One dimension only.")
@click.option("--n-max", type=int, default=12, show_default=True)
def table(n, n_max):
    """κ_n, the κ ratio, C_n and D_n."""
    dims = [n] if n is not None else range(2, n_max + 1)
    echo_json([sh.constants(d).model_dump() for d in dims])
