import click

from mixvol.commands.options import build_config, run_and_exit, sweep_options
from mixvol.schemas.bodies import load_body
from mixvol.schemas.reports import Verdict
from mixvol.services import inequality_lab
from mixvol.services.reports import write_json
from mixvol.services.runner import EXIT_CONTRADICTION, EXIT_OK

# command -> (body roles in argument order, checker)
CHECKS = {
    "thm2": (("K", "Z"), inequality_lab.thm2_check),
    "prop13": (("A", "T"), inequality_lab.prop13_check),
    "prop51": (("K", "T", "A"), inequality_lab.prop51_check),
    "prop53": (("K", "T"), inequality_lab.prop53_check),
    "bonnesen": (("T", "A"), inequality_lab.bonnesen_check),
    "cor52": (("A", "T"), inequality_lab.cor52_check),
}

HELP = {
    "thm2": "V(K,B,B)·V(Z,B,B) >= C_3·κ_3·V(K,Z,B) for a zonotope Z in R^3.",
    "prop13": "I(A+T) >= I(A): exact in the plane, may fail in R^3.",
    "prop51": "V(K,A)·V(T,A) >= (1/2)·V(K,T)·V(A,A) in the plane.",
    "prop53": "(|∂T|/2)(|∂K|/2) >= 2V(T,K) in the plane.",
    "bonnesen": "Inner and outer radii of T relative to A, Bonnesen bounds.",
    "cor52": "I(A+T) > I(A): strict monotonicity in the plane.",
}


@click.group("ineq")
def ineq():
    """Mixed-volume inequalities: seeded sweeps or one instance from body files."""


def _instance(ctx, name, bodies, quadrature, out):
    roles, checker = CHECKS[name]
    if None in bodies.values():
        missing = [r for r in roles if bodies[r] is None]
        raise click.UsageError(f"instance mode needs --{' --'.join(missing)}")
    args = [load_body(bodies[r]) for r in roles]
    if name in ("thm2", "prop13"):
        args.append(quadrature)
    result = checker(*args)
    reports = list(result) if isinstance(result, tuple) else [result]
    for report in reports:
        click.echo(report.model_dump_json(indent=2))
    if out is not None:
        write_json(reports[-1], out)
    # I(A+T) >= I(A) is not a theorem in R^3
    expected_failure = name == "prop13" and args[0].dim == 3
    violated = any(r.verdict == Verdict.violated for r in reports)
    ctx.exit(EXIT_CONTRADICTION if violated and not expected_failure else EXIT_OK)


def _command(name):
    roles = CHECKS[name][0]

    def callback(**options):
        ctx = click.get_current_context()
        bodies = {r: options.pop(f"body_{r.lower()}") for r in roles}
        options["timestamp"] = not options.pop("no_timestamp")
        if any(v is not None for v in bodies.values()):
            _instance(ctx, name, bodies, options["quadrature"], options["out"])
        run_and_exit(ctx, build_config(name, **options))

    callback = sweep_options(callback)
    callback = click.option("--no-timestamp", is_flag=True, default=False)(callback)
    for role in reversed(roles):
        callback = click.option(
            f"--{role}",
            f"body_{role.lower()}",
            type=click.Path(exists=True),
            default=None,
            help=f"Body file for {role} (instance mode).",
        )(callback)
    return click.command(name, help=HELP[name])(callback)


for _name in CHECKS:
    ineq.add_command(_command(_name))
