# mixvol/services/reports.py
import csv
import hashlib
import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel

from mixvol.config import settings
from mixvol.schemas.bodies import body_to_schema
from mixvol.schemas.reports import (
    CheckRecord,
    InequalityReport,
    RunReport,
    SweepReport,
    SweepRow,
    Verdict,
)
from mixvol.services.bodies import Body
from mixvol.services.matrix_core import SymMatrix

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("trial", "inputs_digest", "lhs", "rhs", "gap", "verdict")


def _jsonable(value: Any) -> Any:
    if isinstance(value, Body):
        return body_to_schema(value).model_dump(mode="json")
    if isinstance(value, SymMatrix):
        return {"dim": value.dim, "rows": value.to_rows()}
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def canonical_json(payload: Any) -> str:
    return json.dumps(_jsonable(payload), sort_keys=True, separators=(",", ":"))


def inputs_digest(payload: Any) -> str:
    """SHA-256 of the canonical JSON form of the inputs"""
    return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()


def classify(lhs: float, rhs: float, tol: float, scale: Optional[float] = None):
    """(gap, relative gap, verdict) for the claim lhs >= rhs at relative tol"""
    gap = lhs - rhs
    scale = max(abs(lhs), abs(rhs)) if scale is None else scale
    relative = gap / scale if scale > 0 else 0.0
    if abs(gap) <= tol * scale + 1e-12:
        verdict = Verdict.equality
    elif gap < 0:
        verdict = Verdict.violated
    else:
        verdict = Verdict.holds
    return gap, relative, verdict


def inequality_report(
    name: str,
    lhs: float,
    rhs: float,
    tol: float,
    inputs: Any,
    equality_case: Optional[str] = None,
    scale: Optional[float] = None,
    verdict: Optional[Verdict] = None,
    notes: Optional[List[str]] = None,
    details: Optional[Dict[str, Any]] = None,
) -> InequalityReport:
    gap, relative, computed = classify(lhs, rhs, tol, scale)
    tolerances = dict(settings.tolerances())
    tolerances["equality"] = tol
    return InequalityReport(
        name=name,
        lhs=lhs,
        rhs=rhs,
        gap=gap,
        relative_gap=relative,
        scale=max(abs(lhs), abs(rhs)) if scale is None else scale,
        verdict=verdict or computed,
        equality_case=equality_case,
        inputs_digest=inputs_digest(inputs),
        tolerances=tolerances,
        notes=notes or [],
        details=_jsonable(details or {}),
    )


def summarize_sweep(
    name: str,
    seed: int,
    reports: Sequence[InequalityReport],
    details: Optional[Dict[str, Any]] = None,
) -> SweepReport:
    counts = {v.value: 0 for v in Verdict}
    rows = []
    worst = float("inf")
    for trial, rep in enumerate(reports):
        counts[rep.verdict.value] += 1
        worst = min(worst, rep.relative_gap)
        rows.append(
            SweepRow(
                trial=trial,
                inputs_digest=rep.inputs_digest,
                lhs=rep.lhs,
                rhs=rep.rhs,
                gap=rep.gap,
                verdict=rep.verdict.value,
            )
        )
    tolerances = reports[0].tolerances if reports else dict(settings.tolerances())
    logger.info("%s sweep: %d trials, verdicts %s", name, len(reports), counts)
    return SweepReport(
        name=name,
        seed=seed,
        trials=max(1, len(reports)),
        counts=counts,
        worst_relative_gap=worst if reports else 0.0,
        tolerances=tolerances,
        details=_jsonable(details or {}),
        rows=rows,
    )


def check_record(name: str, report: BaseModel, verdict: str, expected: Iterable[str]):
    expected = list(expected)
    return CheckRecord(
        name=name,
        verdict=verdict,
        expected=expected,
        ok=verdict in expected,
        report=report.model_dump(mode="json"),
    )


def run_report(
    command: str,
    seed: int,
    quadrature: str,
    checks: List[CheckRecord],
    timestamp: bool = True,
) -> RunReport:
    return RunReport(
        artifact=settings.ARTIFACT_NAME,
        version=settings.ARTIFACT_VERSION,
        command=command,
        seed=seed,
        prng=settings.PRNG_NAME,
        quadrature=quadrature,
        tolerances=settings.tolerances(),
        generated_at=datetime.now(timezone.utc).isoformat() if timestamp else None,
        checks=checks,
    )


def write_json(model: BaseModel, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(model.model_dump_json(indent=2) + "\n")
    logger.info("report written to %s", path)
    return path


def write_csv(rows: Sequence[SweepRow], path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([getattr(row, c) for c in CSV_COLUMNS])
    logger.info("sweep table written to %s", path)
    return path


def write_rows_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    return path
