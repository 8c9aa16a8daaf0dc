# mixvol/services/runner.py
import logging
from pathlib import Path
from typing import Tuple, Union

from mixvol.schemas.reports import InequalityReport, RunReport, SweepReport, Verdict
from mixvol.schemas.run_config import RunConfig
from mixvol.services import inequality_lab, sweeps
from mixvol.services.reports import (
    classify,
    run_report,
    write_csv,
    write_json,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_CONTRADICTION = 2

Report = Union[InequalityReport, SweepReport, RunReport]


def reclassify(report: SweepReport, tol: float) -> SweepReport:
    """Re-derive row verdicts at another relative tolerance.

    Rows flagged violated or inconclusive by a structural check keep their
    verdict.
    """
    counts = {v.value: 0 for v in Verdict}
    rows = []
    for row in report.rows:
        verdict = row.verdict
        if verdict not in (Verdict.violated.value, Verdict.inconclusive.value):
            verdict = classify(row.lhs, row.rhs, tol)[2].value
        counts[verdict] += 1
        rows.append(row.model_copy(update={"verdict": verdict}))
    tolerances = dict(report.tolerances, equality=tol)
    return report.model_copy(
        update={"rows": rows, "counts": counts, "tolerances": tolerances}
    )


def _sweep(config: RunConfig) -> SweepReport:
    if config.command == "md_verify":
        report = sweeps.md_verify(
            int(config.params.get("n", 3)), config.trials, config.seed, config.workers
        )
    else:
        report = sweeps.sweep(
            config.command,
            config.trials,
            config.seed,
            config.workers,
            quad=config.quadrature,
        )
    return reclassify(report, config.tol) if config.tol is not None else report


def execute(config: RunConfig) -> Tuple[int, Report]:
    """Dispatch a validated configuration; returns (exit code, report)"""
    logger.info("running %s with seed %d", config.command, config.seed)
    if config.command == "reproduce":
        checks = sweeps.reproduce(config.seed, config.trials, config.workers)
        report = run_report(
            "reproduce", config.seed, config.quadrature, checks, config.timestamp
        )
        code = EXIT_CONTRADICTION if report.contradictions else EXIT_OK
        return code, report
    if config.command == "counterexample":
        p = config.params
        if p.get("scan"):
            report = inequality_lab.counterexample_scan(int(p["n"]))
        else:
            report = inequality_lab.counterexample_verify(
                int(p["n"]), float(p["eps"]), float(p["M"])
            )
        expected = (Verdict.violated, Verdict.inconclusive)
        code = EXIT_OK if report.verdict in expected else EXIT_CONTRADICTION
        return code, report
    report = _sweep(config)
    code = EXIT_CONTRADICTION if report.counts[Verdict.violated.value] else EXIT_OK
    return code, report


def emit(config: RunConfig, report: Report) -> None:
    if config.out is None:
        return
    path = Path(config.out)
    if config.format == "csv":
        if not isinstance(report, SweepReport):
            raise ValueError(
                f"CSV output is available for sweeps, not {config.command}"
            )
        write_csv(report.rows, path)
    else:
        write_json(report, path)


def run(config: RunConfig) -> Tuple[int, Report]:
    code, report = execute(config)
    emit(config, report)
    if code == EXIT_CONTRADICTION:
        logger.warning(
            "%s produced a verdict contradicting the expected one", config.command
        )
    return code, report

