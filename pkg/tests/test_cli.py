import csv
import json
import math

import pytest

from growthlie.cli import main
from growthlie.model import VIETNAM_1995_2018


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def paths_csv(tmp_path, paths):
    path = tmp_path / "paths.csv"
    k, l = paths
    rows = "\n".join(f"{1995 + i},{float(k[i])!r},{float(l[i])!r}" for i in range(len(k)))
    path.write_text("year,capital,labor\n" + rows + "\n")
    return path


@pytest.fixture
def investment_panel(tmp_path):
    path = tmp_path / "panel.csv"
    lines = ["year,gdp,investment,labor"]
    for i in range(12):
        lines.append(f"{2000 + i},{100 * 1.06**i + 3 * math.sin(i)},{20 + 2 * i + math.cos(i)},{50 + i + 0.5 * math.sin(2 * i)}")
    path.write_text("\n".join(lines) + "\n")
    return path


def test_shares(capsys):
    code, out, _ = run(["shares", "--gamma", 0.053, "--alpha", 0.103, "--beta", 2.335], capsys)
    assert code == 0
    s = json.loads(out)["shares"]
    assert (s["tech"], s["capital"], s["labor"]) == pytest.approx((0.0213, 0.0413, 0.9374), abs=5e-5)


def test_shares_negative_gamma_is_validation_error(capsys):
    code, _, err = run(["shares", "--gamma", -1, "--alpha", 1, "--beta", 1], capsys)
    assert code == 1 and "gamma" in err


def test_check_progress_degenerate(capsys):
    code, out, _ = run(["check-progress", "--lambda", 0], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["axioms"]["passed"] is True
    assert doc["holotheticity"]["holothetic"] is False
    assert doc["holotheticity"]["monotone_in_t"] is False


def test_check_progress_holothetic(capsys):
    code, out, _ = run(["check-progress", "--lambda", 0.1, "--t-grid", "0,1,2,5,10", "--points", "1:1,3:2"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["axioms"]["passed"] and doc["holotheticity"]["holothetic"]


def test_check_progress_bad_points(capsys):
    code, _, err = run(["check-progress", "--lambda", 0.1, "--points", "1;1"], capsys)
    assert code == 1 and "K:L" in err


def test_fit_needs_five_rows(tmp_path, capsys):
    path = tmp_path / "short.csv"
    path.write_text("year,gdp,investment,labor\n2000,1,1,1\n2001,2,1,1\n2002,3,1,1\n")
    code, _, err = run(["fit", path, "--k0", 10], capsys)
    assert code == 1
    assert "need ≥ 5 observations" in err


def test_fit_requires_capital_seed(investment_panel, capsys):
    code, _, err = run(["fit", investment_panel], capsys)
    assert code == 1 and "--k0" in err


def test_fit_from_investment(investment_panel, tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(["fit", investment_panel, "--k0", 200, "--sigma", 0.05, "--units", "constant prices", "-o", out], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["n_obs"] == 12
    assert doc["config"]["sigma"] == 0.05 and doc["config"]["initial_capital"] == 200
    assert doc["config"]["time_origin"] == 2000
    assert len(doc["fitted"]) == 12


def test_synth_then_fit_round_trip(paths_csv, tmp_path, capsys):
    panel = tmp_path / "synth.csv"
    p = VIETNAM_1995_2018
    code, _, _ = run(["synth", paths_csv, "--a", p.a, "--alpha", p.alpha, "--beta", p.beta, "--gamma", p.gamma,
                      "-o", panel], capsys)
    assert code == 0
    code, out, _ = run(["fit", panel], capsys)
    assert code == 0
    doc = json.loads(out)
    for name in ("a", "alpha", "beta", "gamma"):
        assert doc["params"][name] == pytest.approx(getattr(p, name), rel=1e-6)
    assert doc["r_squared"] == pytest.approx(1, abs=1e-12)


def test_synth_seeded(paths_csv, tmp_path, capsys):
    argv = ["synth", paths_csv, "--a", 1, "--alpha", 0.3, "--beta", 0.6, "--gamma", 0.02, "--noise-sd", 0.01, "--seed", 5]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b
    assert a.startswith("year,gdp,capital,labor\n")


def test_fit_with_capital_file(paths_csv, tmp_path, capsys):
    synth = tmp_path / "synth.csv"
    run(["synth", paths_csv, "--a", 2, "--alpha", 0.4, "--beta", 0.7, "--gamma", 0.01, "-o", synth], capsys)
    rows = list(csv.DictReader(synth.open()))
    panel = tmp_path / "gdp_labor.csv"
    panel.write_text("year,gdp,labor\n" + "".join(f"{r['year']},{r['gdp']},{r['labor']}\n" for r in rows))
    capital = tmp_path / "capital.csv"
    capital.write_text("year,capital\n" + "".join(f"{r['year']},{r['capital']}\n" for r in rows))
    code, out, _ = run(["fit", panel, "--capital", capital], capsys)
    assert code == 0
    assert json.loads(out)["params"]["alpha"] == pytest.approx(0.4, rel=1e-6)


def test_fit_collinear_is_numeric_failure(tmp_path, capsys):
    path = tmp_path / "collinear.csv"
    lines = ["year,gdp,capital,labor"] + [f"{2000 + i},{1 + i},{2.0 * 1.1**i},{3.0 * 1.1**i}" for i in range(8)]
    path.write_text("\n".join(lines) + "\n")
    code, _, err = run(["fit", path], capsys)
    assert code == 2 and "condition" in err


def test_capital(investment_panel, capsys):
    code, out, _ = run(["capital", investment_panel, "--k0", 100, "--sigma", 0.1], capsys)
    assert code == 0
    rows = list(csv.DictReader(out.splitlines()))
    assert len(rows) == 12 and rows[0]["year"] == "2000"
    inv0 = 20 + 1.0
    assert float(rows[0]["capital"]) == pytest.approx(0.9 * 100 + 0.95 * inv0, rel=1e-15)


def test_capital_steady_state(investment_panel, capsys):
    code, out, _ = run(["capital", investment_panel, "--steady-state", 0.05], capsys)
    assert code == 0


def test_capital_bad_sigma(investment_panel, capsys):
    code, _, _ = run(["capital", investment_panel, "--k0", 100, "--sigma", 1.5], capsys)
    assert code == 1


def test_simulate(tmp_path, capsys):
    scen = tmp_path / "s.csv"
    scen.write_text("t,capital,labor\n0,1,1\n1,1,1\n")
    code, out, _ = run(["simulate", scen, "--a", 0.021, "--alpha", 0.3564, "--beta", 0.7783, "--gamma", 0.0105], capsys)
    assert code == 0
    rows = list(csv.DictReader(out.splitlines()))
    assert float(rows[0]["gdp"]) == pytest.approx(0.021, rel=1e-12)
    assert float(rows[1]["gdp"]) == pytest.approx(0.021 * math.exp(0.0105), rel=1e-12)


def test_simulate_params_from_report(tmp_path, capsys):
    params = tmp_path / "p.json"
    params.write_text(json.dumps({"params": {"a": 0.000005, "alpha": 0.103, "beta": 2.335, "gamma": 0.053}}))
    scen = tmp_path / "s.csv"
    scen.write_text("t,capital,labor\n-1,1,1\n")
    code, out, err = run(["simulate", scen, "--params", params], capsys)
    assert code == 0
    assert "extrapolates" in err


def test_simulate_overflow_is_numeric(tmp_path, capsys):
    scen = tmp_path / "s.csv"
    scen.write_text("t,capital,labor\n0,1e200,1e200\n")
    code, _, err = run(["simulate", scen, "--a", 1, "--alpha", 3, "--beta", 3, "--gamma", 0], capsys)
    assert code == 2 and "overflow" in err


@pytest.mark.parametrize("argv", [["bogus"], ["shares", "--gamma", "1"], ["fit"], ["shares", "--nope", "1"], []])
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 1
    assert "usage" in err
