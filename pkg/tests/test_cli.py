"""CLI behavior: outputs, exit codes, env defaults, determinism."""

import json
import math

import numpy as np
import pytest

from hypmetrics import analysis, cli
from hypmetrics.errors import NoConvergence

BALL2 = '{"kind": "unit_ball", "dim": 2}'


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_tau_json(capsys):
    code, out, _ = run_cli(capsys, "eval", "--metric", "tau",
                           "--domain", BALL2, "--x", "0.2,0", "--y", "0.6,0")
    assert code == 0
    doc = json.loads(out)
    expected = math.log1p(0.4 / math.sqrt(0.8 * 0.4))
    assert doc["value"] == pytest.approx(expected, abs=1e-12)
    assert doc["method"] == "plane_search"
    assert "witness" in doc and "err_bound" in doc


def test_eval_output_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out, _ = run_cli(capsys, "eval", "--metric", "j", "--domain", BALL2,
                           "--x", "0,0", "--y", "0.5,0",
                           "--output", str(path))
    assert code == 0 and out == ""
    doc = json.loads(path.read_text())
    assert doc["value"] == pytest.approx(math.log(2.0), abs=1e-12)


def test_eval_bad_domain_json_is_parse_error(capsys):
    code, _, err = run_cli(capsys, "eval", "--metric", "tau",
                           "--domain", "{not json", "--x", "0,0", "--y", "0,0")
    assert code == cli.EXIT_PARSE
    assert "parse error" in err


def test_eval_point_outside_domain_exit(capsys):
    code, _, err = run_cli(capsys, "eval", "--metric", "tau",
                           "--domain", BALL2, "--x", "2,0", "--y", "0,0")
    assert code == cli.EXIT_DOMAIN
    assert "domain error" in err


def test_eval_dimension_mismatch_exit(capsys):
    code, _, _ = run_cli(capsys, "eval", "--metric", "tau", "--domain", BALL2,
                         "--x", "0.1,0.1,0.1", "--y", "0,0,0")
    assert code == cli.EXIT_DOMAIN


def test_constants_command(capsys):
    code, out, _ = run_cli(capsys, "constants")
    assert code == 0
    doc = json.loads(out)
    assert round(doc["c"], 2) == 0.76
    assert round(doc["t_star"], 2) == 1.16
    assert doc["residual"] <= 1e-10


def test_constants_solver_failure_exit(capsys, monkeypatch):
    def boom():
        raise NoConvergence("forced")
    monkeypatch.setattr(analysis, "solve_constant_c", boom)
    code, _, err = run_cli(capsys, "constants")
    assert code == cli.EXIT_SOLVER
    assert "solver error" in err


def test_verify_single_check_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--check", "bernoulli",
                           "--samples", "500", "--seed", "7")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 1
    assert reports[0]["check"] == "bernoulli"
    assert reports[0]["samples"] == 500 and reports[0]["seed"] == 7
    assert reports[0]["passed"] is True


def test_verify_csv_format(capsys):
    code, out, _ = run_cli(capsys, "verify", "--check", "monotonicity_tau",
                           "--samples", "300", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "check,samples,seed,passed,worst_margin"
    assert lines[1].startswith("monotonicity_tau,300,42,true,")


def test_verify_failure_exit_code(capsys, monkeypatch):
    failed = analysis.VerificationReport(
        check_name="bernoulli", samples=10, seed=42, passed=False,
        worst_margin=-1.0, witness=None)
    monkeypatch.setattr(analysis, "run_check", lambda *a, **k: [failed])
    code, out, _ = run_cli(capsys, "verify", "--check", "bernoulli")
    assert code == cli.EXIT_VERIFY
    assert json.loads(out)[0]["passed"] is False


def test_verify_env_defaults(capsys, monkeypatch):
    monkeypatch.setenv("HYPMETRICS_SEED", "123")
    monkeypatch.setenv("HYPMETRICS_SAMPLES", "250")
    code, out, _ = run_cli(capsys, "verify", "--check", "bernoulli")
    assert code == 0
    rep = json.loads(out)[0]
    assert rep["seed"] == 123 and rep["samples"] == 250


def test_verify_output_is_byte_identical_across_runs(capsys):
    args = ("verify", "--check", "sandwich", "--samples", "400", "--seed", "9")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_ovals_csv(capsys):
    code, out, _ = run_cli(capsys, "ovals", "--focus1=-1,0",
                           "--focus2", "1,0", "--level", "2.0",
                           "--resolution", "64")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,y"
    assert len(lines) == 65
    pts = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]])
    prod = (np.linalg.norm(pts - [-1, 0], axis=1)
            * np.linalg.norm(pts - [1, 0], axis=1))
    assert np.max(np.abs(prod - 4.0)) < 1e-9


def test_ovals_degenerate_foci_parse_error(capsys):
    code, _, _ = run_cli(capsys, "ovals", "--focus1", "0,0", "--focus2", "0,0",
                         "--level", "1.0")
    assert code == cli.EXIT_PARSE


def test_distort_dilatation(capsys):
    spec = json.dumps({"chain": [{"kind": "scaling", "factor": 2.0}]})
    code, out, _ = run_cli(capsys, "distort", "--map", spec,
                           "--points", "1,0", "--radii", "1e-2,1e-3")
    assert code == 0
    doc = json.loads(out)
    assert doc["dilatation"][0]["ratio"] == pytest.approx(1.0, abs=1e-9)


def test_distort_pole_is_domain_error(capsys):
    spec = json.dumps({"chain": [{"kind": "inversion", "center": [1.0, 0.0],
                                  "radius": 1.0}]})
    code, _, _ = run_cli(capsys, "distort", "--map", spec,
                         "--points", "1,0", "--radii", "1e-2")
    assert code == cli.EXIT_DOMAIN


def test_distort_map_file(tmp_path, capsys):
    path = tmp_path / "map.json"
    path.write_text(json.dumps(
        {"chain": [{"kind": "translation", "offset": [1.0, 1.0]}]}))
    code, out, _ = run_cli(capsys, "distort", "--map-file", str(path),
                           "--points", "0,0", "--radii", "1e-2")
    assert code == 0
    assert json.loads(out)["dilatation"][0]["ratio"] == pytest.approx(1.0)


def test_parse_domain_kinds():
    d = cli.parse_domain('{"kind": "ball", "center": [1, 2], "radius": 3}')
    assert d.radius == 3.0
    d = cli.parse_domain('{"kind": "punctured_unit_ball", "a": [0.3, 0]}')
    assert d.dim == 2
    d = cli.parse_domain('{"kind": "punctured_space", "p": [0, 0]}')
    assert d.dim == 2
    d = cli.parse_domain(
        '{"kind": "polygon", "vertices": [[0, 0], [1, 0], [0, 1]]}')
    assert d.contains(np.array([0.2, 0.2]))
    with pytest.raises(ValueError):
        cli.parse_domain('{"kind": "torus"}')
