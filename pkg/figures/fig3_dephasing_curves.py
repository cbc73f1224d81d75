#!/usr/bin/env python3
"""Dephasing-channel complexity versus probability, with the p* ~ 1/n inset."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import matplotlib.pyplot as plt

from figlib import groups, load_columns, save


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", required=True, help="dephasing sweep CSV")
    parser.add_argument("--peaks", required=True, help="dephasing peaks CSV")
    parser.add_argument("--out", required=True)
    parser.add_argument("--n", default="1,2,4,8,16", help="curves to draw")
    args = parser.parse_args(argv)

    sweep = load_columns(args.csv, ["n", "p", "SC_raw"])
    peaks = load_columns(args.peaks, ["n", "p_star"])
    wanted = [int(x) for x in args.n.split(",")]

    fig, ax = plt.subplots(figsize=(6, 4.5))
    for n, mask in groups(sweep["n"]):
        if int(n) not in wanted:
            continue
        order = sweep["p"][mask].argsort()
        ax.plot(sweep["p"][mask][order], sweep["SC_raw"][mask][order],
                label=f"n = {int(n)}")
    ax.set_xlabel("p")
    ax.set_ylabel("S - R2  [nats]")
    ax.set_title("Dephasing channel complexity")
    ax.legend(loc="upper right", fontsize=8)

    inset = ax.inset_axes([0.58, 0.28, 0.38, 0.34])
    inset.loglog(peaks["n"], peaks["p_star"], "o", ms=3)
    ref = peaks["p_star"][0] * peaks["n"][0] / peaks["n"]
    inset.loglog(peaks["n"], ref, "k--", lw=1)
    inset.set_xlabel("n", fontsize=8)
    inset.set_ylabel("p*", fontsize=8)
    inset.tick_params(labelsize=7)

    save(fig, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
