#!/usr/bin/env python3
"""Peak timescale of the TBRE complexity versus interaction strength."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import matplotlib.pyplot as plt

from figlib import load_columns, save


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", nargs="+", required=True,
                        help="tbre-dynamics peaks CSVs (one per particle number)")
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)

    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    guide_anchor = None
    for path in args.csv:
        data = load_columns(path, ["m", "n", "alpha", "t_star"])
        order = data["alpha"].argsort()
        alpha = data["alpha"][order]
        t_star = data["t_star"][order]
        ax.loglog(alpha, t_star, "o-", ms=4,
                  label=f"m = {int(data['m'][0])}, n = {int(data['n'][0])}")
        if guide_anchor is None:
            guide_anchor = (alpha, t_star[0] * alpha[0])
    alpha, c = guide_anchor
    ax.loglog(alpha, c / alpha, "k--", lw=1, label="slope -1 guide")
    ax.set_xlabel("alpha")
    ax.set_ylabel("t*")
    ax.set_title("Complexity peak timescale")
    ax.legend(fontsize=8)
    save(fig, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
