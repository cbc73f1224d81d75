#!/usr/bin/env python3
"""Generate every figure from freshly produced CSV data.

Runs the entrocomplex command-line tool to produce the input CSVs, then each
figure script in turn. Default parameters are desk-scale so the whole
pipeline finishes in minutes; pass --full for acceptance-scale ensembles
(substantially slower).
"""

import argparse
import subprocess
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent


def sh(args):
    print("+", " ".join(str(a) for a in args))
    subprocess.run([str(a) for a in args], check=True)


def cli(*args):
    sh([sys.executable, "-m", "entrocomplex", *args])


def fig(script, *args):
    sh([sys.executable, HERE / script, *args])


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--data", default="figure-data", help="CSV staging directory")
    parser.add_argument("--out", default="figure-output", help="image output directory")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--full", action="store_true",
                        help="acceptance-scale ensembles instead of quick defaults")
    args = parser.parse_args(argv)

    data = Path(args.data)
    out = Path(args.out)
    data.mkdir(parents=True, exist_ok=True)
    out.mkdir(parents=True, exist_ok=True)

    real_goe = "100" if args.full else "10"
    real_tbre = "20" if args.full else "5"
    real_mbl = "200" if args.full else "10"
    real_dyn = "20" if args.full else "5"
    sizes = "256,512,1024" if args.full else "128,256"
    mbl_L = ["12"] if args.full else ["8", "10"]
    tbre_m = "14" if args.full else "10"
    tbre_ns = "3,4,5" if args.full else "2,3"

    cli("channel", "--kind", "depolarize", "--n-max", "63", "--grid", "401",
        "--out", data / "depolarize.csv")
    cli("channel", "--kind", "dephase", "--n-max", "63", "--grid", "401",
        "--out", data / "dephase.csv")
    cli("rmt-goe", "--N", sizes, "--alpha-grid", "logspace:0.001:3:13",
        "--realizations", real_goe, "--seed", str(args.seed),
        "--out", data / "goe.csv")
    cli("rmt-tbre", "--m", tbre_m, "--n", tbre_ns,
        "--alpha-grid", "logspace:0.01:10:9", "--realizations", real_tbre,
        "--seed", str(args.seed), "--out", data / "tbre.csv")
    for L in mbl_L:
        cli("mbl", "--L", L, "--h-grid", "1:8:1", "--realizations", real_mbl,
            "--seed", str(args.seed), "--out", data / f"mbl_L{L}.csv")
    for model in ("exponential", "gaussian", "tanh", "flambaum"):
        cli("dynamics", "--model", model, "--n-states", "1000",
            "--out", data / f"dyn_{model}.csv")
    cli("tbre-dynamics", "--m", "12", "--n", "3", "--alpha-grid", "0.5,1,2,4",
        "--realizations", real_dyn, "--seed", str(args.seed),
        "--out", data / "tbre_dyn.csv")

    fig("fig1_depolarization_curves.py", "--csv", data / "depolarize.csv",
        "--out", out / "fig1.png")
    fig("fig2_depolarization_peaks.py", "--csv", data / "depolarize.peaks.csv",
        "--out", out / "fig2.png")
    fig("fig3_dephasing_curves.py", "--csv", data / "dephase.csv",
        "--peaks", data / "dephase.peaks.csv", "--out", out / "fig3.png")
    fig("fig4_deformed_goe.py", "--csv", data / "goe.csv", "--out", out / "fig4.png")
    fig("fig5_deformed_tbre.py", "--csv", data / "tbre.csv", "--out", out / "fig5.png")
    fig("fig6_mbl_transition.py", "--csv",
        *[data / f"mbl_L{L}.csv" for L in mbl_L], "--out", out / "fig6.png")
    fig("fig7_survival_models.py", "--csv",
        *[data / f"dyn_{m}.csv" for m in ("exponential", "gaussian", "tanh", "flambaum")],
        "--labels", "exponential,gaussian,tanh,interpolation",
        "--out", out / "fig7.png")
    fig("fig8_tbre_complexity_traces.py", "--csv", data / "tbre_dyn.csv",
        "--peaks", data / "tbre_dyn.peaks.csv", "--out", out / "fig8.png")
    fig("fig9_peak_timescale.py", "--csv", data / "tbre_dyn.peaks.csv",
        "--out", out / "fig9.png")
    return 0


if __name__ == "__main__":
    sys.exit(main())
