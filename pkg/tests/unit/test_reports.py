import csv
import json

import numpy as np
import pytest
from pydantic import ValidationError

from mixvol.schemas.reports import InequalityReport, Verdict
from mixvol.services.bodies import Segment, box_polytope
from mixvol.services.matrix_core import SymMatrix
from mixvol.services.reports import (
    CSV_COLUMNS,
    check_record,
    classify,
    inequality_report,
    inputs_digest,
    run_report,
    summarize_sweep,
    write_csv,
    write_json,
)


class TestClassify:
    """Tests for the shared verdict rule"""

    def test_holds(self):
        gap, relative, verdict = classify(2.0, 1.0, 1e-9)
        assert gap == 1.0
        assert relative == pytest.approx(0.5)
        assert verdict == Verdict.holds

    def test_violated(self):
        assert classify(1.0, 2.0, 1e-9)[2] == Verdict.violated

    def test_equality_within_tolerance(self):
        assert classify(1.0, 1.0 + 1e-10, 1e-9)[2] == Verdict.equality
        assert classify(1.0, 1.001, 1e-2)[2] == Verdict.equality

    def test_zero_sides(self):
        gap, relative, verdict = classify(0.0, 0.0, 1e-9)
        assert (gap, relative) == (0.0, 0.0)
        assert verdict == Verdict.equality

    def test_explicit_scale(self):
        # gap 1e-3 sits inside 1e-3 · 10 but outside 1e-3 · 0.5
        assert classify(0.5, 0.501, 1e-3, scale=10.0)[2] == Verdict.equality
        assert classify(0.5, 0.501, 1e-3)[2] == Verdict.violated


class TestInequalityReport:
    def test_fields(self):
        rep = inequality_report("demo", 3.0, 2.0, 1e-9, inputs={"x": 1})

        assert rep.name == "demo"
        assert rep.gap == 1.0
        assert rep.scale == 3.0
        assert rep.verdict == Verdict.holds
        assert rep.tolerances["equality"] == 1e-9
        assert len(rep.inputs_digest) == 64

    def test_forced_verdict(self):
        rep = inequality_report(
            "demo", 1.0, 2.0, 1e-9, inputs={}, verdict=Verdict.inconclusive
        )
        assert rep.verdict == Verdict.inconclusive

    def test_details_made_jsonable(self):
        rep = inequality_report(
            "demo",
            1.0,
            1.0,
            1e-9,
            inputs={},
            details={"array": np.arange(3), "value": np.float64(0.5)},
        )
        assert rep.details == {"array": [0, 1, 2], "value": 0.5}
        json.dumps(rep.model_dump(mode="json"))

    def test_equality_outside_tolerance_rejected(self):
        with pytest.raises(ValidationError):
            InequalityReport(
                name="bad",
                lhs=1.0,
                rhs=2.0,
                gap=-1.0,
                relative_gap=-0.5,
                scale=2.0,
                verdict=Verdict.equality,
                inputs_digest="0" * 64,
                tolerances={"equality": 1e-9},
            )


class TestDigest:
    def test_stable_across_key_order(self):
        assert inputs_digest({"a": 1, "b": 2}) == inputs_digest({"b": 2, "a": 1})

    def test_bodies_and_matrices(self):
        K = box_polytope([1.0, 1.0])
        A = SymMatrix.identity(2)
        assert inputs_digest({"K": K, "A": A}) == inputs_digest(
            {"K": box_polytope([1.0, 1.0]), "A": SymMatrix.identity(2)}
        )

    def test_different_inputs(self):
        a = Segment([0.0, 0.0], [1.0, 0.0])
        b = Segment([0.0, 0.0], [2.0, 0.0])
        assert inputs_digest(a) != inputs_digest(b)


class TestSweepSummaries:
    @pytest.fixture
    def reports(self):
        return [
            inequality_report("demo", 2.0, 1.0, 1e-9, inputs={"t": 0}),
            inequality_report("demo", 1.0, 1.0, 1e-9, inputs={"t": 1}),
            inequality_report("demo", 1.0, 3.0, 1e-9, inputs={"t": 2}),
        ]

    def test_counts_and_rows(self, reports):
        sweep = summarize_sweep("demo", 7, reports, details={"n": 3})

        assert sweep.trials == 3
        assert sweep.counts == {
            "holds": 1,
            "equality": 1,
            "violated": 1,
            "inconclusive": 0,
        }
        assert [row.trial for row in sweep.rows] == [0, 1, 2]
        assert sweep.worst_relative_gap == pytest.approx(-2.0 / 3.0)
        assert sweep.details == {"n": 3}

    def test_write_csv(self, reports, tmp_path):
        sweep = summarize_sweep("demo", 7, reports)
        path = write_csv(sweep.rows, tmp_path / "out" / "rows.csv")

        with path.open() as fh:
            table = list(csv.reader(fh))
        assert tuple(table[0]) == CSV_COLUMNS
        assert len(table) == 4
        assert table[3][-1] == "violated"

    def test_write_json(self, reports, tmp_path):
        sweep = summarize_sweep("demo", 7, reports)
        path = write_json(sweep, tmp_path / "sweep.json")
        assert json.loads(path.read_text())["counts"]["violated"] == 1


class TestRunReports:
    def test_check_record(self):
        rep = inequality_report("demo", 1.0, 1.0, 1e-9, inputs={})
        assert check_record("demo", rep, "equality", ["equality"]).ok
        assert not check_record("demo", rep, "holds", ["equality"]).ok

    def test_contradictions(self):
        rep = inequality_report("demo", 1.0, 1.0, 1e-9, inputs={})
        checks = [
            check_record("good", rep, "equality", ["equality"]),
            check_record("bad", rep, "equality", ["holds"]),
        ]
        report = run_report("reproduce", 7, "icosa3", checks, timestamp=False)

        assert report.generated_at is None
        assert report.artifact == "mixvol"
        assert report.contradictions == ["bad"]

    def test_timestamp(self):
        report = run_report("reproduce", 7, "icosa3", [], timestamp=True)
        assert report.generated_at is not None
