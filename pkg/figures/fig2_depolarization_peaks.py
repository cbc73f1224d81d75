#!/usr/bin/env python3
"""Peak location of the depolarization complexity versus qubit count.

Main panel: 1 - p* against n on log-log axes with a power-law guide fitted
to the large-n tail. Inset: normalized peak height against n.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import matplotlib.pyplot as plt
import numpy as np

from figlib import load_columns, save


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", required=True, help="channel peaks CSV")
    parser.add_argument("--out", required=True)
    parser.add_argument("--fit-min", type=float, default=8.0,
                        help="smallest n used for the guide-line slope")
    args = parser.parse_args(argv)

    data = load_columns(args.csv, ["n", "p_star", "SC_star_norm"])
    n = data["n"]
    gap = 1.0 - data["p_star"]

    fig, ax = plt.subplots(figsize=(6, 4.5))
    ax.loglog(n, gap, "o", ms=4, label="1 - p*")
    tail = n >= args.fit_min
    if tail.sum() >= 2:
        slope, intercept = np.polyfit(np.log(n[tail]), np.log(gap[tail]), 1)
        guide = np.exp(intercept) * n[tail] ** slope
        ax.loglog(n[tail], guide, "k--", lw=1,
                  label=f"slope {slope:.2f} guide")
    ax.set_xlabel("n")
    ax.set_ylabel("1 - p*")
    ax.set_title("Depolarization peak location")
    ax.legend()

    inset = ax.inset_axes([0.12, 0.12, 0.38, 0.38])
    inset.loglog(n, data["SC_star_norm"], "s", ms=3)
    inset.set_xlabel("n", fontsize=8)
    inset.set_ylabel("SC(p*) / n ln 2", fontsize=8)
    inset.tick_params(labelsize=7)

    save(fig, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
