#!/usr/bin/env python3
"""Complexity of the depolarized cat state versus mixing probability, small n."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import matplotlib.pyplot as plt

from figlib import groups, load_columns, save


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", required=True, help="channel sweep CSV")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--n", default="1,2,3", help="comma list of qubit counts to plot")
    args = parser.parse_args(argv)

    data = load_columns(args.csv, ["n", "p", "SC_raw"])
    wanted = [int(x) for x in args.n.split(",")]

    fig, ax = plt.subplots(figsize=(6, 4))
    for n, mask in groups(data["n"]):
        if int(n) not in wanted:
            continue
        order = data["p"][mask].argsort()
        ax.plot(data["p"][mask][order], data["SC_raw"][mask][order], label=f"n = {int(n)}")
    ax.set_xlabel("p")
    ax.set_ylabel("S - R2  [nats]")
    ax.set_title("Depolarization channel complexity")
    ax.legend()
    save(fig, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
