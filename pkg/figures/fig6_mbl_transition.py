#!/usr/bin/env python3
"""Disordered Heisenberg chain: gap ratio, Renyi-2, and complexity versus disorder."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from figlib import groups, load_columns, save, three_panel


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", nargs="+", required=True,
                        help="one or more mbl sweep CSVs (different chain lengths)")
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)

    columns = ["L", "h", "r_mean", "R2_mean", "SC_mean"]
    merged = {col: [] for col in columns}
    for path in args.csv:
        data = load_columns(path, columns)
        for col in columns:
            merged[col].extend(data[col])
    import numpy as np

    data = {col: np.asarray(vals) for col, vals in merged.items()}

    fig, axes = three_panel("(a) gap ratio", "(b) R2", "(c) S - R2")
    for L, mask in groups(data["L"]):
        h = data["h"][mask]
        order = h.argsort()
        label = f"L = {int(L)}"
        axes[0].plot(h[order], data["r_mean"][mask][order], "o-", ms=3, label=label)
        axes[1].plot(h[order], data["R2_mean"][mask][order], "o-", ms=3, label=label)
        axes[2].plot(h[order], data["SC_mean"][mask][order], "o-", ms=3, label=label)
    axes[0].axhline(0.3863, color="gray", lw=0.8, ls=":")
    axes[0].axhline(0.5307, color="gray", lw=0.8, ls=":")
    for ax in axes:
        ax.set_xlabel("h")
    axes[0].set_ylabel("mean r")
    axes[0].legend(fontsize=8)
    save(fig, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
