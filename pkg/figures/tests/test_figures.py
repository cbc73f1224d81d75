"""Figure scripts consume CLI-produced CSVs and must fail loudly on bad schemas."""

import hashlib
import subprocess
import sys
from pathlib import Path

import pytest

FIGDIR = Path(__file__).resolve().parents[1]

ALL_SCRIPTS = [
    "fig1_depolarization_curves.py",
    "fig2_depolarization_peaks.py",
    "fig3_dephasing_curves.py",
    "fig4_deformed_goe.py",
    "fig5_deformed_tbre.py",
    "fig6_mbl_transition.py",
    "fig7_survival_models.py",
    "fig8_tbre_complexity_traces.py",
    "fig9_peak_timescale.py",
]


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "entrocomplex", *map(str, args)],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc


def run_fig(script, *args):
    return subprocess.run([sys.executable, str(FIGDIR / script), *map(str, args)],
                          capture_output=True, text=True)


def checksum(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


@pytest.fixture(scope="session")
def data(tmp_path_factory):
    """Small CSV fixtures produced through the command-line interface."""
    root = tmp_path_factory.mktemp("csv")
    run_cli("channel", "--kind", "depolarize", "--n-min", "1", "--n-max", "10",
            "--grid", "41", "--fit-min", "4", "--fit-max", "10",
            "--out", root / "depolarize.csv")
    run_cli("channel", "--kind", "dephase", "--n-min", "1", "--n-max", "10",
            "--grid", "41", "--fit-min", "4", "--fit-max", "10",
            "--out", root / "dephase.csv")
    run_cli("rmt-goe", "--N", "48,64", "--alpha-grid", "logspace:0.01:2:4",
            "--realizations", "2", "--seed", "7", "--threads", "1",
            "--out", root / "goe.csv")
    run_cli("rmt-tbre", "--m", "6", "--n", "2,3", "--alpha-grid", "0.5,2",
            "--realizations", "2", "--seed", "7", "--threads", "1",
            "--out", root / "tbre.csv")
    run_cli("mbl", "--L", "6", "--h-grid", "1:5:2", "--realizations", "2",
            "--seed", "7", "--threads", "1", "--out", root / "mbl.csv")
    for model in ("gaussian", "flambaum"):
        run_cli("dynamics", "--model", model, "--n-states", "500",
                "--t-points", "80", "--out", root / f"dyn_{model}.csv")
    run_cli("tbre-dynamics", "--m", "6", "--n", "2", "--alpha-grid", "1,2",
            "--realizations", "2", "--states-per-realization", "3",
            "--t-points", "60", "--seed", "7", "--threads", "1",
            "--out", root / "tbre_dyn.csv")
    return root


CASES = {
    "fig1_depolarization_curves.py":
        lambda d: ["--csv", d / "depolarize.csv", "--n", "1,2,3"],
    "fig2_depolarization_peaks.py":
        lambda d: ["--csv", d / "depolarize.peaks.csv", "--fit-min", "4"],
    "fig3_dephasing_curves.py":
        lambda d: ["--csv", d / "dephase.csv", "--peaks", d / "dephase.peaks.csv",
                   "--n", "1,2,4,8"],
    "fig4_deformed_goe.py": lambda d: ["--csv", d / "goe.csv"],
    "fig5_deformed_tbre.py": lambda d: ["--csv", d / "tbre.csv"],
    "fig6_mbl_transition.py": lambda d: ["--csv", d / "mbl.csv"],
    "fig7_survival_models.py":
        lambda d: ["--csv", d / "dyn_gaussian.csv", d / "dyn_flambaum.csv"],
    "fig8_tbre_complexity_traces.py":
        lambda d: ["--csv", d / "tbre_dyn.csv", "--peaks", d / "tbre_dyn.peaks.csv"],
    "fig9_peak_timescale.py": lambda d: ["--csv", d / "tbre_dyn.peaks.csv"],
}


@pytest.mark.parametrize("script", ALL_SCRIPTS)
def test_script_renders_nonempty_image(script, data, tmp_path):
    args = CASES[script](data)
    inputs = [Path(a) for a in args if str(a).endswith(".csv")]
    sums = {p: checksum(p) for p in inputs}
    out = tmp_path / (script.replace(".py", "") + ".png")
    proc = run_fig(script, *args, "--out", out)
    assert proc.returncode == 0, proc.stderr
    assert out.exists() and out.stat().st_size > 0
    for p, s in sums.items():
        assert checksum(p) == s, f"{p} was modified by the figure script"


@pytest.mark.parametrize("script", ALL_SCRIPTS)
def test_schema_mismatch_exits_nonzero(script, data, tmp_path):
    bogus = tmp_path / "bogus.csv"
    bogus.write_text("foo,bar\n1,2\n")
    args = []
    needs_peaks = script in ("fig3_dephasing_curves.py",
                             "fig8_tbre_complexity_traces.py")
    args += ["--csv", bogus]
    if needs_peaks:
        args += ["--peaks", bogus]
    out = tmp_path / "should_not_exist.png"
    proc = run_fig(script, *args, "--out", out)
    assert proc.returncode != 0
    assert "expected" in proc.stderr or "lacks columns" in proc.stderr
    assert not out.exists()


def test_missing_file_exits_nonzero(tmp_path):
    proc = run_fig("fig1_depolarization_curves.py", "--csv",
                   tmp_path / "nope.csv", "--out", tmp_path / "x.png")
    assert proc.returncode != 0
