#!/usr/bin/env python3
"""TBRE survival dynamics: complexity versus rescaled time, survival inset."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import matplotlib.pyplot as plt
import numpy as np

from figlib import die, groups, load_columns, save


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", required=True, help="tbre-dynamics traces CSV")
    parser.add_argument("--peaks", required=True, help="matching peaks CSV")
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)

    traces = load_columns(args.csv, ["alpha", "t", "W0_mean", "SC_mean"])
    peaks = load_columns(args.peaks, ["alpha", "t_star"])
    t_star = {a: t for a, t in zip(peaks["alpha"], peaks["t_star"])}

    fig, ax = plt.subplots(figsize=(6, 4.5))
    inset = ax.inset_axes([0.62, 0.55, 0.36, 0.4])
    for alpha, mask in groups(traces["alpha"]):
        if alpha not in t_star:
            die(f"alpha {alpha} missing from peaks file")
        t = traces["t"][mask]
        order = t.argsort()
        scaled = t[order] / t_star[alpha]
        nz = scaled > 0
        ax.semilogx(scaled[nz], traces["SC_mean"][mask][order][nz],
                    label=f"alpha = {alpha:g}")
        inset.semilogx(scaled[nz], traces["W0_mean"][mask][order][nz], lw=1)
    ax.set_xlabel("t / t*")
    ax.set_ylabel("S - R2  [nats]")
    ax.set_xlim(1e-2, 1e2)
    ax.legend(fontsize=8, loc="upper left")
    inset.set_xlabel("t / t*", fontsize=8)
    inset.set_ylabel("W0", fontsize=8)
    inset.tick_params(labelsize=7)
    save(fig, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
