#!/usr/bin/env python3
"""Deformed GOE: gap ratio, Renyi-2, and complexity versus deformation strength."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from figlib import groups, load_columns, save, three_panel


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", required=True, help="rmt-goe sweep CSV")
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)

    data = load_columns(args.csv, ["N", "alpha", "r_mean", "R2_mean", "SC_mean"])

    fig, axes = three_panel("(a) gap ratio", "(b) R2", "(c) S - R2")
    for N, mask in groups(data["N"]):
        alpha = data["alpha"][mask]
        order = alpha.argsort()
        label = f"N = {int(N)}"
        axes[0].semilogx(alpha[order], data["r_mean"][mask][order], "o-", ms=3, label=label)
        axes[1].semilogx(alpha[order], data["R2_mean"][mask][order], "o-", ms=3, label=label)
        axes[2].semilogx(alpha[order], data["SC_mean"][mask][order], "o-", ms=3, label=label)
    axes[0].axhline(0.3863, color="gray", lw=0.8, ls=":")
    axes[0].axhline(0.5307, color="gray", lw=0.8, ls=":")
    for ax in axes:
        ax.set_xlabel("alpha")
    axes[0].set_ylabel("mean r")
    axes[0].legend(fontsize=8)
    save(fig, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
