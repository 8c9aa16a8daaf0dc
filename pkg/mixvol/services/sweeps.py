# mixvol/services/sweeps.py
import concurrent.futures
import functools
import logging
import math
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from mixvol.config import settings
from mixvol.errors import CapacityError, ParameterError
from mixvol.schemas.reports import CheckRecord, InequalityReport, SweepReport, Verdict
from mixvol.services import harmonics, inequality_lab
from mixvol.services.bodies import (
    Ball,
    Body,
    Polytope,
    Segment,
    box_polytope,
    disk_polygon,
    embed,
    point,
    random_body_from_rng,
    unit_cube,
)
from mixvol.services.matrix_core import SymMatrix, psd_from_rng, trial_rng
from mixvol.services.mixed_discriminant import (
    MatArgs,
    md_incl_excl,
    md_perm,
    thm1_check,
)
from mixvol.services.mixed_volume import mstar
from mixvol.services.reports import (
    check_record,
    inequality_report,
    summarize_sweep,
)
from mixvol.services.sphere import kappa

logger = logging.getLogger(__name__)

R = TypeVar("R")


def _invoke(fn: Callable[[np.random.Generator], R], master_seed: int, trial: int) -> R:
    return fn(trial_rng(master_seed, trial))


def run_trials(
    fn: Callable[[np.random.Generator], R],
    master_seed: int,
    trials: int,
    workers: Optional[int] = None,
) -> List[R]:
    """Run fn once per trial with the generator of (master_seed, trial).

    With workers > 1 the trials go to a process pool; `fn` must then be
    picklable (a module-level function or a functools.partial of one).
    Results come back in trial order either way.
    """
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    workers = settings.WORKERS if workers is None else max(1, int(workers))
    task = functools.partial(_invoke, fn, master_seed)
    if workers == 1:
        return [task(t) for t in range(trials)]
    chunk = max(1, trials // (4 * workers))
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(task, range(trials), chunksize=chunk))


# --- trial generators -------------------------------------------------------


def _random_planar(rng: np.random.Generator, kinds: Sequence[str]) -> Body:
    kind = kinds[int(rng.integers(len(kinds)))]
    if kind == "polygon":
        return random_body_from_rng(rng, "polytope", 2, int(rng.integers(3, 9)))
    if kind == "segment":
        return random_body_from_rng(rng, "segment", 2, 2)
    if kind == "zonotope":
        return random_body_from_rng(rng, "zonotope", 2, int(rng.integers(1, 4)))
    return point(rng.standard_normal(2))


def _full_polygon(rng: np.random.Generator) -> Polytope:
    return random_body_from_rng(rng, "polytope", 2, int(rng.integers(3, 11)))


def thm1_triple(rng: np.random.Generator, n: int) -> Tuple[SymMatrix, ...]:
    rank3 = n if rng.random() < 0.7 else int(rng.integers(0, n))
    return (
        psd_from_rng(rng, n, int(rng.integers(1, n + 1))),
        psd_from_rng(rng, n, int(rng.integers(1, n + 1))),
        psd_from_rng(rng, n, rank3),
    )


def md_trial_failures(
    agreement: float, identity: Optional[float], consistent: bool
) -> List[str]:
    """Names of the structural checks a discriminant trial fails"""
    failures = []
    if agreement > settings.MD_AGREEMENT_TOL:
        failures.append("algorithm_disagreement")
    if identity is not None and identity > settings.THM1_IDENTITY_TOL:
        failures.append("identity_residual")
    if not consistent:
        failures.append("inconsistent_classification")
    return failures


def _md_trial(n: int, rng: np.random.Generator) -> InequalityReport:
    a1, a2, a3 = thm1_triple(rng, n)
    args = MatArgs(tuple(p for p in ((a1, 1), (a2, 1), (a3, n - 2)) if p[1] > 0))
    perm, incl = md_perm(args), md_incl_excl(args)
    agreement = abs(perm - incl) / max(1.0, abs(perm), abs(incl))
    thm1 = thm1_check(a1, a2, a3)
    scale = max(1.0, abs(thm1.lhs), abs(thm1.rhs))
    identity = None
    if thm1.trace_identity_residual is not None:
        identity = thm1.trace_identity_residual / scale
    failures = md_trial_failures(agreement, identity, thm1.consistent)
    if failures:
        logger.debug("discriminant trial failed %s", ", ".join(failures))
    return inequality_report(
        "thm1",
        thm1.lhs,
        thm1.rhs,
        settings.THM1_GAP_TOL,
        inputs={"A1": a1, "A2": a2, "A3": a3},
        scale=scale,
        equality_case=thm1.equality_case.value,
        verdict=Verdict.violated if failures else None,
        details={
            "algorithm_disagreement": agreement,
            "identity_residual": identity,
            "rank_a3": thm1.rank_a3,
            "consistent": thm1.consistent,
            "failed_checks": failures,
        },
    )


def md_verify(
    n: int, trials: int, seed: int, workers: Optional[int] = None
) -> SweepReport:
    """Seeded sweep: both discriminant algorithms, the inequality, its trace
    identity and the equality classification on random PSD triples."""
    if n < 2:
        raise ParameterError(f"md verify needs n >= 2, got {n}")
    if n > settings.MD_PERM_MAX_N:
        raise CapacityError(
            f"md verify compares against the permutation expansion, limited to "
            f"n <= {settings.MD_PERM_MAX_N}; got n = {n}"
        )
    reports = run_trials(functools.partial(_md_trial, n), seed, trials, workers)
    residuals = [
        r.details["identity_residual"]
        for r in reports
        if r.details["identity_residual"] is not None
    ]
    return summarize_sweep(
        f"md_verify_n{n}",
        seed,
        reports,
        details={
            "n": n,
            "max_algorithm_disagreement": max(
                r.details["algorithm_disagreement"] for r in reports
            ),
            "max_identity_residual": max(residuals) if residuals else None,
            "inconsistent_classifications": sum(
                not r.details["consistent"] for r in reports
            ),
            "failed_checks": {
                name: sum(name in r.details["failed_checks"] for r in reports)
                for name in (
                    "algorithm_disagreement",
                    "identity_residual",
                    "inconsistent_classification",
                )
            },
        },
    )


def thm2_trial(quad, rng: np.random.Generator) -> InequalityReport:
    K = random_body_from_rng(rng, "polytope", 3, int(rng.integers(4, 13)))
    Z = random_body_from_rng(rng, "zonotope", 3, int(rng.integers(1, 5)))
    return inequality_lab.thm2_check(K, Z, quad)


def prop13_trial(
    rng: np.random.Generator,
) -> Tuple[InequalityReport, InequalityReport]:
    A = _full_polygon(rng)
    T = _random_planar(rng, ("polygon", "segment", "zonotope"))
    return inequality_lab.prop13_check(A, T)


def prop51_trial(rng: np.random.Generator) -> InequalityReport:
    kinds = ("polygon", "polygon", "segment", "zonotope", "point")
    return inequality_lab.prop51_check(
        _random_planar(rng, kinds),
        _random_planar(rng, kinds),
        _random_planar(rng, kinds),
    )


def prop53_trial(rng: np.random.Generator) -> InequalityReport:
    kinds = ("polygon", "segment", "zonotope")
    return inequality_lab.prop53_check(
        _random_planar(rng, kinds), _random_planar(rng, kinds)
    )


def bonnesen_trial(rng: np.random.Generator) -> InequalityReport:
    return inequality_lab.bonnesen_check(_full_polygon(rng), _full_polygon(rng))


def cor52_trial(rng: np.random.Generator) -> InequalityReport:
    T = _random_planar(rng, ("polygon", "segment", "zonotope"))
    return inequality_lab.cor52_check(_full_polygon(rng), T)


def segment_pair_trial(
    lmax, rng: np.random.Generator
) -> Tuple[InequalityReport, InequalityReport]:
    """(thm2, conjecture) reports for a random polytope and a random segment"""
    K = random_body_from_rng(rng, "polytope", 3, int(rng.integers(4, 13)))
    Z = random_body_from_rng(rng, "segment", 3, 2)
    return (
        inequality_lab.thm2_check(K, Z),
        harmonics.conjecture_check(K, Z, lmax),
    )


def smooth_conjecture_trial(lmax, rng: np.random.Generator) -> InequalityReport:
    K = harmonics.random_smooth_body(rng=rng)
    T = harmonics.random_smooth_body(rng=rng)
    return harmonics.conjecture_check(K, T, lmax)


def merge_violations(primary: SweepReport, other: SweepReport) -> SweepReport:
    """Rows of `primary`, turned violated where the same trial of `other` is"""
    if len(primary.rows) != len(other.rows):
        raise ParameterError("cannot merge sweeps of different lengths")
    counts = {v.value: 0 for v in Verdict}
    rows = []
    for row, twin in zip(primary.rows, other.rows):
        verdict = row.verdict
        if twin.verdict == Verdict.violated.value:
            verdict = Verdict.violated.value
        counts[verdict] += 1
        rows.append(row.model_copy(update={"verdict": verdict}))
    return primary.model_copy(update={"rows": rows, "counts": counts})


SWEEPS = {
    "thm2": thm2_trial,
    "prop51": prop51_trial,
    "prop53": prop53_trial,
    "bonnesen": bonnesen_trial,
    "cor52": cor52_trial,
}


def sweep(
    name: str,
    trials: int,
    seed: int,
    workers: Optional[int] = None,
    quad=None,
) -> SweepReport:
    """Seeded sweep of one checker.

    prop13 rows follow I(A+T) >= I(A); a trial whose mixed-volume form fails
    is counted as violated too, and that form's own summary sits in details.
    """
    if name == "prop13":
        pairs = run_trials(prop13_trial, seed, trials, workers)
        mixed = summarize_sweep("prop13_i", seed, [p[0] for p in pairs])
        direct = summarize_sweep(
            "prop13",
            seed,
            [p[1] for p in pairs],
            details={"mixed_volume_form": mixed.model_dump(exclude={"rows"})},
        )
        return merge_violations(direct, mixed)
    if name not in SWEEPS:
        raise ParameterError(f"unknown sweep {name!r}")
    fn = SWEEPS[name]
    if name == "thm2":
        fn = functools.partial(thm2_trial, quad)
    return summarize_sweep(name, seed, run_trials(fn, seed, trials, workers))


# --- the reproduction suite -------------------------------------------------

HOLDS = (Verdict.holds.value, Verdict.equality.value)


def _sweep_verdict(report: SweepReport) -> str:
    return Verdict.violated.value if report.counts["violated"] else Verdict.holds.value


def _thm1_equality_instances() -> List[Tuple[str, SymMatrix, SymMatrix, SymMatrix]]:
    n = 3
    return [
        (
            "case_i",
            SymMatrix.diag([1.0, 0.0, 0.0]),
            SymMatrix.diag([0.0, 1.0, 0.0]),
            SymMatrix.identity(n),
        ),
        (
            "case_ii",
            SymMatrix.identity(n),
            SymMatrix.identity(n),
            SymMatrix.diag([1.0, 0.0, 0.0]),
        ),
        (
            "case_iii",
            SymMatrix.diag([1.0, 0.0, 0.0]),
            SymMatrix.identity(n),
            SymMatrix.diag([1.0, 1.0, 0.0]),
        ),
    ]


def reproduce(
    seed: int, trials: int, workers: Optional[int] = None
) -> List[CheckRecord]:
    """Every verification of the suite, each with the verdicts it may take"""
    checks: List[CheckRecord] = []
    logger.info("reproduction suite: seed %d, %d trials per sweep", seed, trials)

    for n in range(2, 7):
        rep = md_verify(n, trials, seed, workers)
        checks.append(check_record(f"thm1_sweep_n{n}", rep, _sweep_verdict(rep), HOLDS))
    for case, a1, a2, a3 in _thm1_equality_instances():
        rep = thm1_check(a1, a2, a3)
        verdict = "equality" if rep.equality else "holds"
        ok_case = rep.equality_case.value == case
        checks.append(
            check_record(
                f"thm1_{case}",
                rep,
                verdict if ok_case else "misclassified",
                ["equality"],
            )
        )

    square = embed(box_polytope([1.0, 1.0]), 3)
    e3 = Segment([0.0, 0.0, 0.0], [0.0, 0.0, 1.0])
    rep = inequality_lab.thm2_check(square, e3)
    checks.append(check_record("thm2_orthogonal", rep, rep.verdict.value, ["equality"]))
    rep = inequality_lab.thm2_check(Ball.unit(3), Ball.unit(3))
    expected_gap = kappa(3) ** 2 * (1.0 - math.pi / 4.0)
    gap_ok = abs(rep.gap - expected_gap) <= 1e-3 * expected_gap
    checks.append(
        check_record(
            "thm2_balls",
            rep,
            rep.verdict.value if gap_ok else "gap_mismatch",
            ["holds"],
        )
    )
    rep = sweep("thm2", trials, seed, workers)
    checks.append(check_record("thm2_sweep", rep, _sweep_verdict(rep), HOLDS))

    rng = np.random.default_rng(5)
    zono = random_body_from_rng(rng, "zonotope", 3, 3)
    for rep in inequality_lab.prop13_check(unit_cube(3), zono):
        checks.append(check_record(f"{rep.name}_cube", rep, rep.verdict.value, HOLDS))
    rep = sweep("prop13", trials, seed, workers)
    checks.append(check_record("prop13_sweep_2d", rep, _sweep_verdict(rep), HOLDS))

    rep = inequality_lab.counterexample_verify(3, 0.1, 400.0)
    checks.append(check_record("counterexample", rep, rep.verdict.value, ["violated"]))
    deriv = rep.details["first_variation"]
    checks.append(
        check_record(
            "counterexample_first_variation",
            rep,
            "negative" if deriv["fprime0"] < 0 else "nonnegative",
            ["negative"],
        )
    )

    K, T = Segment([0.0, 0.0], [1.0, 0.0]), Segment([0.0, 0.0], [0.0, 1.0])
    rep = inequality_lab.prop51_check(K, T, unit_cube(2))
    checks.append(
        check_record("prop51_parallelogram", rep, rep.verdict.value, ["equality"])
    )
    for name in ("prop51", "prop53", "bonnesen", "cor52"):
        rep = sweep(name, trials, seed, workers)
        checks.append(check_record(f"{name}_sweep", rep, _sweep_verdict(rep), HOLDS))
    rep = inequality_lab.prop53_check(
        Segment([0.0, 0.0], [2.0, 0.0]), Segment([0.0, 0.0], [0.0, 3.0])
    )
    checks.append(check_record("prop53_segments", rep, rep.verdict.value, ["equality"]))
    rep = inequality_lab.bonnesen_check(box_polytope([1.0, 1.0]), disk_polygon())
    checks.append(
        check_record("bonnesen_disk_square", rep, rep.verdict.value, ["holds"])
    )

    for n in range(2, 13):
        const = harmonics.constants(n)
        verdict = "holds" if const.bound_ok else "violated"
        checks.append(check_record(f"constants_n{n}", const, verdict, ["holds"]))

    cube = unit_cube(3)
    spectral = harmonics.mv_spectral(cube, Ball.unit(3))
    direct = kappa(3) * mstar(cube)
    rep = inequality_report(
        "mv_spectral_cube_ball",
        spectral,
        direct,
        1e-3,
        inputs={"K": cube, "T": Ball.unit(3)},
    )
    checks.append(check_record(rep.name, rep, rep.verdict.value, ["equality"]))
    rep = harmonics.conjecture_check(
        Segment([0.0, 0.0, -1.0], [0.0, 0.0, 1.0]),
        Segment([-1.0, 0.0, 0.0], [1.0, 0.0, 0.0]),
    )
    checks.append(
        check_record("conjecture_segments", rep, rep.verdict.value, ["equality"])
    )
    pairs = run_trials(
        functools.partial(segment_pair_trial, None),
        seed,
        max(1, trials // 10),
        workers,
    )
    disagreements = sum(
        (t.verdict == Verdict.violated) != (c.verdict == Verdict.violated)
        for t, c in pairs
    )
    agreement = summarize_sweep(
        "conjecture_vs_thm2",
        seed,
        [c for _, c in pairs],
        details={"disagreements": disagreements},
    )
    checks.append(
        check_record(
            agreement.name,
            agreement,
            "agree" if disagreements == 0 else "disagree",
            ["agree"],
        )
    )
    smooth = summarize_sweep(
        "conjecture_smooth",
        seed,
        run_trials(
            functools.partial(smooth_conjecture_trial, 8),
            seed,
            max(1, trials // 10),
            workers,
        ),
    )
    checks.append(check_record(smooth.name, smooth, _sweep_verdict(smooth), HOLDS))

    failed = [c.name for c in checks if not c.ok]
    if failed:
        logger.warning("contradicting verdicts: %s", ", ".join(failed))
    return checks

