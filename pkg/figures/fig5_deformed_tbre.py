#!/usr/bin/env python3
"""Deformed TBRE: gap ratio, Renyi-2, and complexity for several particle numbers."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from figlib import groups, load_columns, save, three_panel


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", required=True, help="rmt-tbre sweep CSV")
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)

    data = load_columns(args.csv, ["m", "n", "alpha", "r_mean", "R2_mean", "SC_mean"])
    m = int(data["m"][0])

    fig, axes = three_panel("(a) gap ratio", "(b) R2", "(c) S - R2")
    for n, mask in groups(data["n"]):
        alpha = data["alpha"][mask]
        order = alpha.argsort()
        label = f"n = {int(n)}"
        axes[0].semilogx(alpha[order], data["r_mean"][mask][order], "o-", ms=3, label=label)
        axes[1].semilogx(alpha[order], data["R2_mean"][mask][order], "o-", ms=3, label=label)
        axes[2].semilogx(alpha[order], data["SC_mean"][mask][order], "o-", ms=3, label=label)
    for ax in axes:
        ax.set_xlabel("alpha")
    axes[0].set_ylabel("mean r")
    axes[0].legend(fontsize=8, title=f"m = {m}")
    save(fig, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
