#!/usr/bin/env python3
"""Complexity traces of analytic survival-probability models on one time axis."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import matplotlib.pyplot as plt

from figlib import load_columns, save


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", nargs="+", required=True,
                        help="dynamics CSVs, one per survival model")
    parser.add_argument("--labels", default=None,
                        help="comma list of curve labels (default: file stems)")
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)

    labels = (args.labels.split(",") if args.labels
              else [Path(p).stem for p in args.csv])
    if len(labels) != len(args.csv):
        print("error: need as many labels as CSV files", file=sys.stderr)
        return 2

    fig, (ax_sc, ax_w0) = plt.subplots(1, 2, figsize=(10, 4))
    for path, label in zip(args.csv, labels):
        data = load_columns(path, ["t", "W0", "SC"])
        nz = data["t"] > 0
        ax_sc.semilogx(data["t"][nz], data["SC"][nz], label=label)
        ax_w0.semilogx(data["t"][nz], data["W0"][nz], label=label)
    ax_sc.set_xlabel("t / T")
    ax_sc.set_ylabel("S - R2  [nats]")
    ax_sc.set_title("complexity")
    ax_sc.legend(fontsize=8)
    ax_w0.set_xlabel("t / T")
    ax_w0.set_ylabel("W0")
    ax_w0.set_title("survival probability")
    save(fig, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
