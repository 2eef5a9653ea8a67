"""Tests for the command-line entry point."""

import json
import subprocess
import sys
from itertools import permutations

import pytest

from equivariant_ehrhart import cli
from equivariant_ehrhart.errors import VerificationFailed
from equivariant_ehrhart.hypersimplex import rotation_matrix
from equivariant_ehrhart.selftest import (
    PI3_PERMREP_INTERVALS,
    PI3_PERMREP_SIMPLICES,
    CheckResult,
)


def write_json(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


@pytest.fixture
def pi3_files(tmp_path):
    """Polytope and rotation-group files for Pi_3."""
    polytope = write_json(
        tmp_path / "pi3.json", {"vertices": [list(p) for p in permutations((1, 2, 3))]}
    )
    group = write_json(tmp_path / "z3.json", {"generators": [{"matrix": rotation_matrix(3)}]})
    return polytope, group


def run_json(argv, capsys):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


class TestCommands:
    """Tests for successful subcommands."""

    def test_ehrhart(self, tmp_path, capsys):
        square = write_json(tmp_path / "square.json", {"vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]})
        code, document = run_json(["ehrhart", "--polytope", square], capsys)
        assert code == 0
        assert document["hstar"] == ["1", "1"]
        assert document["ehrhart_polynomial"] == ["1", "2", "1"]

    def test_rational_ehrhart(self, tmp_path, capsys):
        segment = write_json(tmp_path / "segment.json", {"vertices": [["0"], ["1/2"]]})
        code, document = run_json(["ehrhart", "--polytope", segment], capsys)
        assert code == 0
        assert document["quasipolynomial"]["period"] == 2
        assert "ehrhart_polynomial" not in document

    def test_hstar(self, pi3_files, capsys):
        polytope, group = pi3_files
        code, document = run_json(
            ["hstar", "--polytope", polytope, "--group", group, "--table", "cyclic:3"], capsys
        )
        assert code == 0
        assert document["is_effective"] is True
        assert document["Hstar"][1] == {"class_function": ["4", "1", "1"]}

    def test_fixed_polytopes(self, pi3_files, capsys):
        polytope, group = pi3_files
        code, document = run_json(
            ["fixed-polytopes", "--polytope", polytope, "--group", group], capsys
        )
        assert code == 0
        assert [c["fixed_dim"] for c in document["classes"]] == [2, 0, 0]

    def test_chi_tp(self, pi3_files, capsys):
        polytope, group = pi3_files
        code, document = run_json(["chi-tp", "--polytope", polytope, "--group", group], capsys)
        assert code == 0
        assert document["period"] == 1

    def test_halfopen_permrep(self, pi3_files, tmp_path, capsys):
        polytope, group = pi3_files
        decomposition = write_json(tmp_path / "decomposition.json", {
            "simplices": [[list(p) for p in s] for s in PI3_PERMREP_SIMPLICES],
            "intervals": [
                {"lower": [list(p) for p in lower], "upper": [list(p) for p in upper]}
                for lower, upper in PI3_PERMREP_INTERVALS
            ],
        })
        code, document = run_json([
            "halfopen", "--polytope", polytope, "--group", group,
            "--decomposition", decomposition, "--mode", "permrep",
        ], capsys)
        assert code == 0
        assert document["validation"]["ok"] is True
        assert document["permrep"]["invariant_interval"] == 0

    def test_zonotope_path(self, capsys):
        code, document = run_json(["zonotope", "--path", "3", "--automorphism", "2,1,0"], capsys)
        assert code == 0
        assert document["ehrhart_polynomial"] == ["1", "2", "1"]
        assert document["path_effectiveness"]["is_effective"] is True

    def test_zonotope_non_polynomial(self, capsys):
        code, document = run_json(
            ["zonotope", "--complete", "4", "--automorphism", "1,0,2,3"], capsys
        )
        assert code == 0
        assert document["polynomiality"]["case"] == "non-polynomial"

    def test_hypersimplex(self, capsys):
        code, document = run_json(["hypersimplex", "--k", "2", "--n", "4"], capsys)
        assert code == 0
        assert document["formula"]["1"] == ["1", "0", "1"]
        assert document["winding_counts"] == ["1", "2", "1", "0"]

    def test_prime_permutahedron(self, capsys):
        code, document = run_json(["prime-permutahedron", "--p", "3"], capsys)
        assert code == 0
        assert document["hstar"] == [1, 4, 1]

    def test_certify_orbit_point(self, capsys):
        code, document = run_json(["certify", "--orbit-point", "1,2,3,4"], capsys)
        assert code == 0
        assert document["verdict"] == "not-exists"

    def test_selftest_subset(self, capsys):
        code, document = run_json(["selftest", "--check", "stanley-k3"], capsys)
        assert code == 0
        assert document["passed"] is True

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        code = cli.run(["--out", str(target), "prime-permutahedron", "--p", "3"])
        assert code == 0
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["p"] == 3


class TestExitCodes:
    """Tests for error reporting and exit codes."""

    def test_missing_file(self, tmp_path, capsys):
        code = cli.run(["ehrhart", "--polytope", str(tmp_path / "missing.json")])
        assert code == 2
        report = json.loads(capsys.readouterr().err)
        assert report["error"] == "InvalidInput"

    def test_schema_violation(self, tmp_path, capsys):
        bad = write_json(tmp_path / "bad.json", {"vertices": "nope"})
        assert cli.run(["ehrhart", "--polytope", bad]) == 2
        assert json.loads(capsys.readouterr().err)["error"] == "ValidationError"

    def test_inputs_validated_before_computing(self, pi3_files, tmp_path, capsys):
        polytope, _group = pi3_files
        bad_group = write_json(tmp_path / "group.json", {"generators": [{}]})
        assert cli.run(["hstar", "--polytope", polytope, "--group", bad_group]) == 2
        assert capsys.readouterr().out == ""

    def test_domain_error(self, capsys):
        assert cli.run(["prime-permutahedron", "--p", "4"]) == 2
        assert json.loads(capsys.readouterr().err)["error"] == "NotPrime"

    def test_invalid_config(self, capsys):
        assert cli.run(["--workers", "0", "prime-permutahedron", "--p", "3"]) == 2

    def test_certify_without_input(self, capsys):
        assert cli.run(["certify"]) == 2

    def test_internal_error(self, monkeypatch, capsys):
        def fail(job):
            raise VerificationFailed("mismatch", {"check": "demo"})

        monkeypatch.setitem(cli.COMMANDS, "selftest", fail)
        assert cli.run(["selftest"]) == 1
        assert json.loads(capsys.readouterr().err)["error"] == "VerificationFailed"

    def test_failed_check(self, monkeypatch, capsys):
        monkeypatch.setattr(
            cli, "run_selftest", lambda names: [CheckResult("demo", False, "expected 1, got 2")]
        )
        code, document = run_json(["selftest"], capsys)
        assert code == 1
        assert document["passed"] is False

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as exc_info:
            cli.run([])
        assert exc_info.value.code == 2


@pytest.mark.integration
class TestModuleEntryPoint:
    """Runs the package as a module in a subprocess."""

    def test_selftest_subprocess(self):
        completed = subprocess.run(
            [sys.executable, "-m", "equivariant_ehrhart", "selftest", "--check", "pi3-ehrhart"],
            capture_output=True, text=True, check=False,
        )
        assert completed.returncode == 0
        assert json.loads(completed.stdout)["passed"] is True
