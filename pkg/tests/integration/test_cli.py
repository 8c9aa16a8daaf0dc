import csv
import json
import math

import pytest
from click.testing import CliRunner

from mixvol import __version__
from mixvol.main import cli
from mixvol.services import sweeps
from mixvol.services.bodies import Segment, box_polytope, embed
from mixvol.services.reports import inequality_report

pytestmark = pytest.mark.integration


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def segments_2d(write_body):
    return (
        write_body(Segment([0.0, 0.0], [2.0, 0.0]), "k.json"),
        write_body(Segment([0.0, 0.0], [0.0, 3.0]), "t.json"),
    )


class TestRoot:
    def test_version(self, runner):
        result = runner.invoke(cli, ["--version"])

        assert result.exit_code == 0
        assert __version__ in result.output

    def test_unknown_command_exits_1(self, runner):
        result = runner.invoke(cli, ["frobnicate"])
        assert result.exit_code == 1

    def test_missing_file_exits_1(self, runner):
        result = runner.invoke(cli, ["mv", "info", "--body", "missing.json"])
        assert result.exit_code == 1


class TestMdCommands:
    """Tests for the md group"""

    def test_verify(self, runner):
        result = runner.invoke(cli, ["md", "verify", "--trials", "3", "--seed", "5"])

        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["name"] == "md_verify_n3"
        assert report["trials"] == 3
        assert report["counts"]["violated"] == 0

    def test_verify_failed_check_exits_2(self, runner, monkeypatch):
        monkeypatch.setattr(
            sweeps, "md_incl_excl", lambda args, *a, **kw: sweeps.md_perm(args) + 1.0
        )
        result = runner.invoke(cli, ["md", "verify", "--trials", "3", "--workers", "1"])

        assert result.exit_code == 2
        report = json.loads(result.stdout)
        assert report["counts"]["violated"] == 3

    def test_verify_capacity(self, runner):
        result = runner.invoke(cli, ["md", "verify", "--n", "9", "--trials", "1"])
        assert result.exit_code == 1

    def test_bad_quadrature(self, runner):
        result = runner.invoke(cli, ["md", "verify", "--quad", "lebedev5"])
        assert result.exit_code == 1

    @pytest.mark.parametrize("method", ["perm", "incl_excl", "grouped"])
    def test_compute(self, runner, write_json, method):
        path = write_json(
            {
                "items": [
                    {"matrix": {"dim": 2, "rows": [[1, 0], [0, 2]]}},
                    {"matrix": {"dim": 2, "rows": [[3, 0], [0, 4]]}},
                ]
            }
        )
        args = ["md", "compute", "--args", path, "--method", method]
        result = runner.invoke(cli, args)

        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        # D(A, B) = (a11·b22 + a22·b11) / 2 for diagonal matrices
        assert payload["value"] == pytest.approx(5.0)
        assert payload["method"] == method

    def test_compute_asymmetric(self, runner, write_json):
        path = write_json(
            {
                "items": [
                    {"matrix": {"dim": 2, "rows": [[1, 2], [3, 1]]}, "multiplicity": 2}
                ]
            }
        )
        result = runner.invoke(cli, ["md", "compute", "--args", path])
        assert result.exit_code == 1


class TestBodyCommands:
    def test_make_and_show(self, runner, tmp_path):
        out = tmp_path / "cube.json"
        made = runner.invoke(cli, ["bodies", "make", "cube", "--out", str(out)])
        assert made.exit_code == 0

        shown = runner.invoke(cli, ["bodies", "show", "--body", str(out)])
        assert shown.exit_code == 0
        summary = json.loads(shown.stdout)
        assert summary["volume"] == pytest.approx(1.0)
        assert summary["surface_area"] == pytest.approx(6.0)
        assert summary["info"] == pytest.approx(1.0 / 6.0)

    def test_make_random_is_seeded(self, runner):
        args = ["bodies", "make", "polytope", "--size", "6", "--seed", "3"]
        first = runner.invoke(cli, args)
        second = runner.invoke(cli, args)

        assert first.exit_code == 0
        assert first.stdout == second.stdout
        assert json.loads(first.stdout)["kind"] == "polytope"

    def test_make_prism(self, runner):
        result = runner.invoke(cli, ["bodies", "make", "truncated_prism"])

        assert result.exit_code == 0
        assert json.loads(result.stdout) == {
            "kind": "truncated_prism",
            "n": 3,
            "eps": 0.1,
            "M": 400.0,
        }

    def test_make_bad_kind(self, runner):
        result = runner.invoke(cli, ["bodies", "make", "torus"])
        assert result.exit_code == 1


class TestMvCommands:
    def test_compute(self, runner, write_json):
        path = write_json(
            {
                "items": [
                    {"body": {"kind": "segment", "a": [0, 0], "b": [1, 0]}},
                    {"body": {"kind": "segment", "a": [0, 0], "b": [0, 3]}},
                ]
            }
        )
        result = runner.invoke(cli, ["mv", "compute", "--args", path])

        assert result.exit_code == 0
        assert json.loads(result.stdout)["value"] == pytest.approx(1.5)

    def test_mstar_planar(self, runner, write_body, square):
        result = runner.invoke(cli, ["mv", "mstar", "--body", write_body(square)])

        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["dim"] == 2
        assert payload["mstar"] == pytest.approx(2.0 / math.pi, rel=1e-5)

    def test_info(self, runner, write_body, rectangle):
        result = runner.invoke(cli, ["mv", "info", "--body", write_body(rectangle)])

        assert result.exit_code == 0
        assert json.loads(result.stdout)["info"] == pytest.approx(2.0 / 6.0)

    def test_info_undefined(self, runner, write_body, segment_e3):
        result = runner.invoke(cli, ["mv", "info", "--body", write_body(segment_e3)])
        assert result.exit_code == 1

    def test_variation(self, runner, write_body, cube):
        a = write_body(cube, "a.json")
        t = write_body(cube, "t.json")
        result = runner.invoke(cli, ["mv", "variation", "--A", a, "--T", t])

        assert result.exit_code == 0
        assert set(json.loads(result.stdout)) >= {"V0", "W0", "fprime0"}


class TestIneqCommands:
    def test_prop53_instance(self, runner, segments_2d):
        k, t = segments_2d
        result = runner.invoke(cli, ["ineq", "prop53", "--K", k, "--T", t])

        assert result.exit_code == 0
        assert json.loads(result.stdout)["verdict"] == "equality"

    def test_thm2_instance(self, runner, write_body, segment_e3, tmp_path):
        square = write_body(embed(box_polytope([1.0, 1.0]), 3), "square.json")
        z = write_body(segment_e3, "z.json")
        out = tmp_path / "thm2.json"
        result = runner.invoke(
            cli, ["ineq", "thm2", "--K", square, "--Z", z, "--out", str(out)]
        )

        assert result.exit_code == 0
        assert json.loads(out.read_text())["verdict"] == "equality"

    def test_instance_missing_role(self, runner, segments_2d):
        result = runner.invoke(cli, ["ineq", "prop53", "--K", segments_2d[0]])
        assert result.exit_code == 1

    def test_instance_wrong_dimension(self, runner, segments_2d):
        k, t = segments_2d
        result = runner.invoke(cli, ["ineq", "thm2", "--K", k, "--Z", t])
        assert result.exit_code == 1

    def test_sweep_csv(self, runner, tmp_path):
        out = tmp_path / "rows.csv"
        result = runner.invoke(
            cli,
            [
                "ineq",
                "bonnesen",
                "--trials",
                "4",
                "--format",
                "csv",
                "--out",
                str(out),
            ],
        )

        assert result.exit_code == 0
        assert "bonnesen: 4 trials" in result.stdout
        with out.open() as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 4
        assert all(r["verdict"] in ("holds", "equality") for r in rows)

    def test_prop13_mixed_volume_failure_exits_2(self, runner, monkeypatch):
        def broken_trial(rng):
            return (
                inequality_report("prop13_i", 1.0, 2.0, 1e-9, inputs={"t": 0}),
                inequality_report("prop13", 2.0, 1.0, 1e-9, inputs={"t": 0}),
            )

        monkeypatch.setattr(sweeps, "prop13_trial", broken_trial)
        result = runner.invoke(
            cli, ["ineq", "prop13", "--trials", "2", "--workers", "1"]
        )

        assert result.exit_code == 2
        assert json.loads(result.stdout)["counts"]["violated"] == 2

    @pytest.mark.parametrize(
        "name, text",
        [
            ("thm2", "V(K,B,B)·V(Z,B,B) >= C_3·κ_3·V(K,Z,B)"),
            ("prop51", "V(K,A)·V(T,A) >= (1/2)·V(K,T)·V(A,A)"),
            ("cor52", "I(A+T) > I(A)"),
        ],
    )
    def test_help_states_the_inequality(self, runner, name, text):
        result = runner.invoke(cli, ["ineq", name, "--help"])

        assert result.exit_code == 0
        assert text in " ".join(result.stdout.split())

    def test_sweep_bad_tol(self, runner):
        result = runner.invoke(cli, ["ineq", "prop51", "--tol", "2"])
        assert result.exit_code == 1


class TestCounterexampleCommand:
    def test_default_pair(self, runner):
        result = runner.invoke(cli, ["counterexample"])

        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["verdict"] == "violated"
        assert report["details"]["feasible"] is True
        assert report["details"]["first_variation"]["fprime0"] < 0

    def test_infeasible_pair(self, runner):
        result = runner.invoke(cli, ["counterexample", "--M", "10"])

        assert result.exit_code == 0
        assert json.loads(result.stdout)["verdict"] == "inconclusive"

    def test_bad_eps(self, runner):
        result = runner.invoke(cli, ["counterexample", "--eps", "1.5"])

        assert result.exit_code == 1
        assert "Error" in result.output

    def test_out_file(self, runner, tmp_path):
        out = tmp_path / "ce.json"
        args = ["--n", "4", "--eps", "0.05", "--M", "10000", "--out", str(out)]
        result = runner.invoke(cli, ["counterexample", *args])

        assert result.exit_code == 0
        assert "counterexample ->" in result.stdout
        assert json.loads(out.read_text())["verdict"] == "violated"


class TestHarmonicsCommands:
    def test_constants(self, runner):
        result = runner.invoke(cli, ["harmonics", "constants", "--n-max", "5"])

        assert result.exit_code == 0
        table = json.loads(result.stdout)
        assert [row["n"] for row in table] == [2, 3, 4, 5]
        assert table[1]["D_n"] == pytest.approx(math.pi / (4.0 - math.pi))

    def test_expand_csv(self, runner, write_body, ball3, tmp_path):
        out = tmp_path / "coeffs.csv"
        result = runner.invoke(
            cli,
            [
                "harmonics",
                "expand",
                "--body",
                write_body(ball3),
                "--lmax",
                "2",
                "--format",
                "csv",
                "--out",
                str(out),
            ],
        )

        assert result.exit_code == 0
        with out.open() as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 9
        assert float(rows[0]["value"]) == pytest.approx(1.0, rel=1e-6)

    def test_mv_random_smooth(self, runner):
        result = runner.invoke(
            cli, ["harmonics", "mv", "--random-smooth", "4", "--lmax", "4"]
        )

        assert result.exit_code == 0
        assert "spectral" in json.loads(result.stdout)

    def test_conjecture_needs_bodies(self, runner):
        result = runner.invoke(cli, ["harmonics", "conjecture"])
        assert result.exit_code == 1


@pytest.mark.slow
class TestReproduceCommand:
    def test_reproduce(self, runner, tmp_path):
        out = tmp_path / "run.json"
        result = runner.invoke(
            cli,
            [
                "paper",
                "reproduce",
                "--trials",
                "10",
                "--no-timestamp",
                "--out",
                str(out),
            ],
        )

        assert result.exit_code == 0
        report = json.loads(out.read_text())
        assert report["generated_at"] is None
        assert all(check["ok"] for check in report["checks"])

    def test_reproduce_is_byte_identical(self, runner, tmp_path):
        outputs = []
        for name in ("a.json", "b.json"):
            out = tmp_path / name
            result = runner.invoke(
                cli,
                [
                    "paper",
                    "reproduce",
                    "--trials",
                    "3",
                    "--seed",
                    "11",
                    "--no-timestamp",
                    "--out",
                    str(out),
                ],
            )
            assert result.exit_code == 0
            outputs.append(out.read_bytes())

        assert outputs[0] == outputs[1]
