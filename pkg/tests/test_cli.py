import csv
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from entrocomplex.cli import parse_grid, run
from entrocomplex.errors import ValidationError


def read_csv(path):
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = list(reader)
    return header, rows


def test_parse_grid_range_inclusive():
    grid = parse_grid("1:8:0.5")
    assert grid[0] == 1.0 and grid[-1] == 8.0
    assert len(grid) == 15


def test_parse_grid_logspace():
    grid = parse_grid("logspace:0.01:100:5")
    assert np.allclose(grid, [0.01, 0.1, 1.0, 10.0, 100.0])


def test_parse_grid_comma_list():
    assert parse_grid("0.5,1,2,4").tolist() == [0.5, 1.0, 2.0, 4.0]


def test_parse_grid_rejects_garbage():
    with pytest.raises(ValidationError):
        parse_grid("5:1:1")
    with pytest.raises(ValidationError):
        parse_grid("logspace:0:1")


def test_channel_subcommand(tmp_path):
    out = tmp_path / "wp.csv"
    code = run(["channel", "--kind", "depolarize", "--n-max", "4", "--grid", "51",
                "--fit-min", "1", "--fit-max", "4", "--out", str(out)])
    assert code == 0
    header, rows = read_csv(out)
    assert header == ["n", "p", "S", "R2", "SC_raw", "SC_norm"]
    assert len(rows) == 4 * 51
    pheader, prows = read_csv(tmp_path / "wp.peaks.csv")
    assert pheader == ["n", "p_star", "SC_star_raw", "SC_star_norm"]
    assert len(prows) == 4
    manifest = json.loads((tmp_path / "wp.csv.manifest.json").read_text())
    assert manifest["subcommand"] == "channel"
    assert manifest["version"]
    assert "fits" in manifest
    assert str(out) in manifest["outputs"]


def test_channel_determinism(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    for out in (a, b):
        assert run(["channel", "--kind", "dephase", "--n-max", "3", "--grid", "21",
                    "--fit-min", "1", "--fit-max", "3", "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_mbl_subcommand(tmp_path):
    out = tmp_path / "mbl.csv"
    code = run(["mbl", "--L", "6", "--h-grid", "1:3:1", "--realizations", "3",
                "--seed", "42", "--threads", "1", "--out", str(out)])
    assert code == 0
    header, rows = read_csv(out)
    assert header == ["L", "h", "r_mean", "r_err", "S_mean", "R2_mean",
                      "SC_mean", "SC_err", "realizations"]
    assert len(rows) == 3
    assert rows[0][0] == "6"
    # determinism under identical argv
    out2 = tmp_path / "mbl2.csv"
    run(["mbl", "--L", "6", "--h-grid", "1:3:1", "--realizations", "3",
         "--seed", "42", "--threads", "1", "--out", str(out2)])
    assert out.read_bytes() == out2.read_bytes()


def test_rmt_goe_subcommand(tmp_path):
    out = tmp_path / "goe.csv"
    code = run(["rmt-goe", "--N", "64,128", "--alpha-grid", "logspace:0.01:1:3",
                "--realizations", "2", "--seed", "7", "--threads", "1",
                "--out", str(out)])
    assert code == 0
    header, rows = read_csv(out)
    assert header[:2] == ["N", "alpha"]
    assert len(rows) == 6
    sizes = {row[0] for row in rows}
    assert sizes == {"64", "128"}


def test_rmt_tbre_subcommand(tmp_path):
    out = tmp_path / "tbre.csv"
    code = run(["rmt-tbre", "--m", "6", "--n", "2,3", "--alpha-grid", "0.5,2",
                "--realizations", "2", "--seed", "3", "--threads", "1",
                "--out", str(out)])
    assert code == 0
    header, rows = read_csv(out)
    assert header[:4] == ["m", "n", "N", "alpha"]
    assert len(rows) == 4
    dims = {(row[1], row[2]) for row in rows}
    assert dims == {("2", str(math.comb(6, 2))), ("3", str(math.comb(6, 3)))}


def test_dynamics_flambaum_matches_formula(tmp_path):
    out = tmp_path / "dyn.csv"
    code = run(["dynamics", "--model", "flambaum", "--gamma2-over-delta2", "2",
                "--n-states", "1000", "--t-points", "100", "--out", str(out)])
    assert code == 0
    header, rows = read_csv(out)
    assert header == ["t", "W0", "S", "R2", "SC"]
    t = np.array([float(r[0]) for r in rows])
    w0 = np.array([float(r[1]) for r in rows])
    assert np.abs(w0 - np.exp(1.0 - np.sqrt(1.0 + t**2))).max() < 1e-12


def test_tbre_dynamics_subcommand(tmp_path):
    out = tmp_path / "tdyn.csv"
    code = run(["tbre-dynamics", "--m", "6", "--n", "2", "--alpha-grid", "1,2",
                "--realizations", "2", "--states-per-realization", "3",
                "--t-points", "60", "--seed", "11", "--threads", "1",
                "--out", str(out)])
    assert code == 0
    header, rows = read_csv(out)
    assert header == ["m", "n", "alpha", "t", "W0_mean", "SC_mean"]
    assert len(rows) == 2 * 61
    pheader, prows = read_csv(tmp_path / "tdyn.peaks.csv")
    assert pheader == ["m", "n", "alpha", "t_star", "SC_max"]
    assert len(prows) == 2
    assert float(prows[0][3]) > float(prows[1][3])  # t* falls with alpha


def test_fit_power_subcommand(tmp_path):
    src = tmp_path / "points.csv"
    with open(src, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y"])
        for x in (1.0, 2.0, 4.0, 8.0):
            writer.writerow([x, 3.0 * x**-1.5])
    out = tmp_path / "fit.json"
    code = run(["fit", "--input", str(src), "--x-col", "x", "--y-col", "y",
                "--out", str(out)])
    assert code == 0
    result = json.loads(out.read_text())
    assert result["exponent"] == pytest.approx(-1.5, abs=1e-12)


def test_fit_crossover_subcommand(tmp_path):
    src = tmp_path / "curve.csv"
    with open(src, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["alpha", "r"])
        writer.writerow([1.0, 0.39])
        writer.writerow([2.0, 0.53])
    out = tmp_path / "cross.json"
    code = run(["fit", "--input", str(src), "--x-col", "alpha", "--y-col", "r",
                "--kind", "crossover", "--target", "0.46", "--out", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["control"] == pytest.approx(1.5)


def test_fit_missing_column_is_validation_error(tmp_path):
    src = tmp_path / "points.csv"
    src.write_text("a,b\n1,2\n")
    code = run(["fit", "--input", str(src), "--x-col", "x", "--y-col", "y",
                "--out", str(tmp_path / "f.json")])
    assert code == 2


def test_invalid_grid_returns_2(tmp_path):
    code = run(["mbl", "--L", "6", "--h-grid", "8:1:1", "--realizations", "1",
                "--out", str(tmp_path / "x.csv")])
    assert code == 2


def test_unknown_flag_exits_2(tmp_path):
    with pytest.raises(SystemExit) as exc:
        run(["channel", "--kind", "depolarize", "--frobnicate", "--out",
             str(tmp_path / "x.csv")])
    assert exc.value.code == 2


def test_threads_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("ENTROCOMPLEX_THREADS", "1")
    a = tmp_path / "env.csv"
    run(["mbl", "--L", "6", "--h-grid", "2:4:2", "--realizations", "2",
         "--seed", "5", "--out", str(a)])
    monkeypatch.delenv("ENTROCOMPLEX_THREADS")
    b = tmp_path / "flag.csv"
    run(["mbl", "--L", "6", "--h-grid", "2:4:2", "--realizations", "2",
         "--seed", "5", "--threads", "2", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_module_entrypoint(tmp_path):
    out = tmp_path / "m.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "entrocomplex", "channel", "--kind", "dephase",
         "--n-max", "2", "--grid", "11", "--fit-min", "1", "--fit-max", "2",
         "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert out.exists()
