import json

import pandas as pd
import pytest
from click.testing import CliRunner

from cli.congruence import cli, parse_alphas, parse_int_list
from app.prover import FAMILY_ALPHAS


@pytest.fixture
def runner():
    return CliRunner()


def test_parse_alphas():
    assert parse_alphas("theorem-list") == list(FAMILY_ALPHAS)
    assert parse_alphas("all") == list(FAMILY_ALPHAS)
    assert parse_alphas("1,3-5, 9") == [1, 3, 4, 5, 9]
    assert parse_int_list("2,2,1") == [1, 2]


def test_coeffs_exact_values(runner):
    result = runner.invoke(cli, ["coeffs", "--k", "2", "--n", "3", "--exact", "--format", "json"])
    assert result.exit_code == 0, result.output
    rows = json.loads(result.output)
    assert rows == [{"k": 2, "n": 3, "modulus": 3, "residue": 2, "exact": 8}]

    result = runner.invoke(cli, ["coeffs", "--k", "1", "--n", "4", "--exact"])
    assert result.exit_code == 0
    assert "exact = 5" in result.output


def test_coeffs_residue(runner):
    result = runner.invoke(cli, ["coeffs", "--k", "5", "--n", "19", "--modulus", "3"])
    assert result.exit_code == 0
    assert result.output.strip() == "a_5(19) mod 3 = 0"


def test_coeffs_csv_range(runner):
    result = runner.invoke(cli, ["coeffs", "--k", "1", "--n", "0:5", "--modulus", "7", "--format", "csv"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "k,n,modulus,residue"
    assert [int(line.split(",")[3]) for line in lines[1:]] == [1, 1, 2, 3, 5, 0]


@pytest.mark.parametrize("args", [["--k", "2", "--n", "5:2"], ["--k", "0", "--n", "3"], ["--k", "2", "--n", "x"]])
def test_coeffs_usage_errors(runner, args):
    result = runner.invoke(cli, ["coeffs", *args])
    assert result.exit_code == 2


def test_verify_internal_writes_report(runner, tmp_path):
    out = tmp_path / "internal.json"
    result = runner.invoke(cli, ["verify", "internal", "--alpha", "1", "--format", "json", "--output", str(out)])
    assert result.exit_code == 0, result.output
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["schema_version"] == "1.0"
    assert payload["command"] == "verify internal"
    (report,) = payload["results"]
    assert report["bound"] == 1700
    assert report["status"] == "passed"
    assert json.loads(result.output)["results"][0]["bound"] == 1700


def test_verify_internal_refuses_short_precision(runner):
    result = runner.invoke(cli, ["verify", "internal", "--alpha", "1", "--precision", "10"])
    assert result.exit_code == 2
    assert "Sturm minimum" in result.output


def test_negative_control_exits_one(runner):
    result = runner.invoke(cli, ["verify", "internal", "--alpha", "2", "--mode", "direct", "--n-max", "100"])
    assert result.exit_code == 1
    assert "FAIL" in result.output


def test_verify_family_and_base(runner):
    result = runner.invoke(cli, ["verify", "family", "--alpha", "1,7", "--k", "0", "--n-max", "20"])
    assert result.exit_code == 0, result.output
    assert "2/2 checks passed" in result.output
    result = runner.invoke(cli, ["verify", "base", "--j", "0", "--t", "0-2", "--n-max", "10", "--workers", "2"])
    assert result.exit_code == 0, result.output


def test_verify_ramanujan_text_summary(runner):
    result = runner.invoke(cli, ["verify", "ramanujan", "--n-max", "200", "--precision", "2000"])
    assert result.exit_code == 0, result.output
    assert "9/9 checks passed" in result.output
    assert "metrics:" in result.output


def test_scan_with_table_export(runner, tmp_path):
    table = tmp_path / "scan.csv"
    result = runner.invoke(
        cli, ["verify", "scan", "--alpha", "0-4", "--n-max", "40", "--format", "json", "--table", str(table)]
    )
    assert result.exit_code == 1
    frame = pd.read_csv(table)
    assert list(frame["alpha"]) == [0, 1, 2, 3, 4]
    statuses = dict(zip(frame["alpha"], frame["status"]))
    assert statuses[1] == "passed"
    assert statuses[2] == "failed"


def test_eta_check_explicit(runner):
    assert runner.invoke(cli, ["verify", "eta-check", "--eta", "1:24", "--level", "1"]).exit_code == 0
    assert runner.invoke(cli, ["verify", "eta-check", "--eta", "1:2", "--level", "1"]).exit_code == 1
    assert runner.invoke(cli, ["verify", "eta-check", "--eta", "1:24"]).exit_code == 2
    assert runner.invoke(cli, ["verify", "eta-check", "--eta", "4:2", "--level", "6"]).exit_code == 2


def test_eta_check_alpha_list(runner):
    result = runner.invoke(cli, ["verify", "eta-check", "--alpha", "theorem-list", "--format", "json"])
    assert result.exit_code == 0, result.output
    assert len(json.loads(result.output)["results"]) == 25


def test_cube_dissection_command(runner):
    result = runner.invoke(cli, ["verify", "cube-dissection", "--precision", "1000"])
    assert result.exit_code == 0, result.output


def test_params_command(runner):
    result = runner.invoke(cli, ["params", "--alpha", "1,4"])
    assert result.exit_code == 0
    assert "1700" in result.output
    assert "1780" in result.output


def test_sturm_without_lift_keeps_minimal_bound(runner):
    result = runner.invoke(
        cli, ["verify", "sturm", "--alpha", "63", "--factor", "1", "--no-lift", "--format", "json"]
    )
    assert result.exit_code == 0, result.output
    (report,) = json.loads(result.output)["results"]
    assert report["bound"] == 484
    assert report["details"]["effective_A"] == 3
    assert "lift" not in report["details"]
