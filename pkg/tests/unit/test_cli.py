import csv
import json
import os

import pytest
from click.testing import CliRunner

from eckart_nu import exc
from eckart_nu import main as eckart_main
from eckart_nu.main import cli
from eckart_nu.runconfig import load_config, parse_states
from eckart_nu.version import __version__

CONFIGS = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, "configs")

SMALL_RUN = """
[model]
alpha = 1/a
beta = 0.0001
a = 40

[schemes]
names = f1, f5d

[states]
list = 0,1,3; 1,1,3; 2,4,5

[solver]
n_points = 2000
n_scan = 100
energy_tol = 1e-9
approx_oracle = true

[error_profile]
ell = 2
schemes = f1, f4
origin_grid = 0.01, 5.0, 11
r0_grid = 0.9, 1.1, 5

[degeneracy]
pairs =
    0,2,3 ; 1,1,3
    0,1,5 ; 0,2,3
zero_energy = 0,1,3
n_samples = 50

[reference]
0,1,5 = 0.0413635
"""


@pytest.fixture
def run_config(tmp_path):
    path = tmp_path / "run.ini"
    path.write_text(SMALL_RUN)
    return str(path)


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


def invoke(*args):
    return CliRunner().invoke(cli, list(args))


def test_version():
    runner = CliRunner()
    result = runner.invoke(cli, ['--version'])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_energies_table1(tmp_path):
    out = str(tmp_path / "table1.csv")
    result = invoke("energies", "--config", os.path.join(CONFIGS, "table1.ini"), "--out", out)
    assert result.exit_code == 0, result.output
    assert "Wrote 9 rows" in result.output
    rows = read_csv(out)
    first = rows[0]
    assert (first["n_r"], first["ell"], first["D"]) == ("0", "1", "3")
    assert first["f1"] == "-0.1008879"
    assert first["f3"] == "-0.1008358"
    assert first["f5d"] == "-0.1008410"
    assert float(first["f1_full"]) == pytest.approx(-0.1008879, abs=1e-7)


def test_energies_missing_state(run_config, tmp_path):
    out = str(tmp_path / "energies.csv")
    result = invoke("energies", "--config", run_config, "--out", out)
    assert result.exit_code == 0, result.output
    rows = read_csv(out)
    assert rows[2]["f5d"] == "…"
    assert rows[2]["f5d_full"] == "…"


def test_energies_json(run_config, tmp_path):
    out = str(tmp_path / "energies.json")
    result = invoke("energies", "--config", run_config, "--out", out, "--format", "json")
    assert result.exit_code == 0, result.output
    with open(out, encoding="utf-8") as f:
        payload = json.load(f)
    assert payload["meta"]["command"] == "energies"
    assert payload["columns"][:3] == ["n_r", "ell", "D"]
    assert payload["rows"][0]["f1"] == pytest.approx(-0.1008879, abs=1e-7)
    assert payload["rows"][2]["f5d"] is None
    assert payload["errors"] == []


def test_json_rows_read_back_as_state_list(run_config, tmp_path):
    out = str(tmp_path / "energies.json")
    result = invoke("energies", "--config", run_config, "--out", out, "--format", "json")
    assert result.exit_code == 0, result.output
    with open(out, encoding="utf-8") as f:
        rows = json.load(f)["rows"]
    states = load_config(run_config).states
    assert parse_states(rows) == states
    rerun = tmp_path / "rerun.json"
    rerun.write_text(json.dumps({"model": {"beta": 0.0001, "a": 40}, "states": rows}))
    assert load_config(str(rerun)).states == states


def test_energies_scheme_invalid_marker(tmp_path):
    path = tmp_path / "invalid.json"
    path.write_text(json.dumps({
        "model": {"beta": 0.0001, "a": 40},
        "schemes": {"names": ["neg"]},
        "scheme.neg": {"kind": "F5", "lambdas": [1.5, 0.0, -0.5, 0.0]},
        "states": {"n_r": [0], "ell": [1], "D": [3]},
    }))
    out = str(tmp_path / "invalid.csv")
    result = invoke("energies", "--config", str(path), "--out", out)
    assert result.exit_code == 0, result.output
    assert read_csv(out)[0]["neg"] == "!scheme-invalid"


def test_error_profile(run_config, tmp_path):
    out = str(tmp_path / "profile.csv")
    result = invoke("error-profile", "--config", run_config, "--out", out)
    assert result.exit_code == 0, result.output
    rows = read_csv(out)
    assert len(rows) == 16
    assert list(rows[0]) == ["region", "r", "error_f1", "error_f4"]
    assert [row["region"] for row in rows].count("r0") == 5
    middle = [row for row in rows if row["region"] == "r0"][2]
    assert abs(float(middle["error_f4"])) < 1e-8 * abs(float(middle["error_f1"]))


def test_compare_oracle(run_config, tmp_path):
    out = str(tmp_path / "oracle.csv")
    result = invoke("compare-oracle", "--config", run_config, "--out", out)
    assert result.exit_code == 0, result.output
    rows = read_csv(out)
    assert "f1_oracle_diff" in rows[0]
    ground = rows[0]
    assert float(ground["oracle_full"]) == pytest.approx(-0.1008359, abs=1e-5)
    assert float(ground["f1_diff"]) < 0
    assert abs(float(ground["f5d_oracle_diff"])) < 1e-4
    assert rows[2]["f5d"] == "…"


def test_degeneracy(run_config, tmp_path):
    out = str(tmp_path / "degeneracy.csv")
    result = invoke("degeneracy", "--config", run_config, "--out", out)
    assert result.exit_code == 0, result.output
    rows = read_csv(out)
    kinds = [row["kind"] for row in rows]
    assert kinds == ["degeneracy", "degeneracy", "zero-energy"]
    crossing, always, zero = rows
    assert 4.4 < float(crossing["a"]) < 4.6
    assert always["a"] == "…"
    assert always["always_degenerate"] == "true"
    assert float(zero["a"]) == pytest.approx(2.0, abs=0.01)


def test_degeneracy_without_root(tmp_path):
    path = tmp_path / "deg.ini"
    path.write_text("[model]\nbeta = 0.0001\na = 40\n\n[degeneracy]\n"
                    "pairs = 0,2,3 ; 1,1,3\nsign = minus\nn_samples = 20\n")
    out = str(tmp_path / "deg.csv")
    result = invoke("degeneracy", "--config", str(path), "--out", out)
    assert result.exit_code == 0, result.output
    assert read_csv(out)[0]["a"] == "!no-sign-change"


def test_normalize_check(run_config, tmp_path):
    out = str(tmp_path / "norm.csv")
    result = invoke("normalize-check", "--config", run_config, "--out", out)
    assert result.exit_code == 0, result.output
    rows = read_csv(out)
    assert len(rows) == 6
    ground = rows[0]
    assert float(ground["norm_integral"]) == pytest.approx(1.0, abs=1e-8)
    assert abs(float(ground["overlap_01"])) < 1e-8
    assert [row["node_count"] for row in rows[:2]] == ["0", "1"]
    assert rows[5]["scheme"] == "f5d"
    assert rows[5]["energy"] == "…"


def test_identity_report(run_config, tmp_path):
    out = str(tmp_path / "identity.csv")
    result = invoke("identity-report", "--config", run_config, "--out", out, "-v")
    assert result.exit_code == 0, result.output
    rows = read_csv(out)
    # one D = 5 state, two schemes; under f5d neither side is bound
    assert len(rows) == 2
    f5d = [row for row in rows if row["scheme"] == "f5d"][0]
    assert f5d["identity_holds"] == "true"
    assert f5d["energy"] == "…"


def test_identity_report_reference(tmp_path):
    path = tmp_path / "identity.json"
    path.write_text(json.dumps({
        "model": {"beta": 0.0001, "a": 40},
        "schemes": {"names": ["f5d"]},
        "states": {"n_r": [0], "ell": [1, 2], "D": [5]},
        "reference": {"0,1,5": 0.0413635},
    }))
    out = str(tmp_path / "identity.json.out")
    result = invoke("identity-report", "--config", str(path), "--out", out, "--format", "json")
    assert result.exit_code == 0, result.output
    with open(out, encoding="utf-8") as f:
        rows = json.load(f)["rows"]
    assert all(row["identity_holds"] for row in rows)
    assert rows[0]["deviation"] == pytest.approx(-rows[0]["energy"] - 0.0413635)
    assert rows[1]["reference"] is None


def test_output_path_from_config(run_config, tmp_path):
    out = tmp_path / "from_config.csv"
    with open(run_config, "a") as f:
        f.write("\n[output]\npath = {}\n".format(out))
    result = invoke("energies", "--config", run_config)
    assert result.exit_code == 0, result.output
    assert out.exists()


def test_no_output_path(run_config):
    result = invoke("energies", "--config", run_config)
    assert result.exit_code == 2
    assert "No output path" in result.output


def test_config_error_exit_code(tmp_path):
    path = tmp_path / "bad.ini"
    path.write_text("[model]\nbeta = 0.0001\n")
    result = invoke("energies", "--config", str(path), "--out", str(tmp_path / "x.csv"))
    assert result.exit_code == 2
    assert "a is required" in result.output


def test_numeric_error_exit_code(run_config, tmp_path, monkeypatch):
    def fail(*args, **kwargs):
        raise exc.NonConverged("Bisection did not converge")
    monkeypatch.setattr(eckart_main, "spectrum_table", fail)
    result = invoke("compare-oracle", "--config", run_config, "--out", str(tmp_path / "o.csv"),
                    "--log-level", "DEBUG")
    assert result.exit_code == 3
    assert "did not converge" in result.output
