"""Shared helpers for the figure scripts: schema-checked CSV loading, styling.

Each script declares the columns it needs; a mismatch aborts with a nonzero
exit listing the expected header instead of drawing a partial plot. Scripts
never modify their inputs.
"""

import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

SCHEMA_EXIT = 3


def die(message: str):
    print(f"error: {message}", file=sys.stderr)
    sys.exit(SCHEMA_EXIT)


def load_columns(path, required: list[str]) -> dict:
    """Read a CSV into float column arrays, enforcing the required header."""
    path = Path(path)
    if not path.exists():
        die(f"input file {path} does not exist")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            die(f"{path} is empty; expected columns {required}")
        missing = [col for col in required if col not in header]
        if missing:
            die(f"{path} lacks columns {missing}; expected header with {required}")
        idx = {col: header.index(col) for col in required}
        rows = [row for row in reader if row]
    if not rows:
        die(f"{path} holds a header but no data rows")
    out = {}
    for col in required:
        try:
            out[col] = np.array([float(row[idx[col]]) for row in rows])
        except ValueError as exc:
            die(f"{path} column {col} is not numeric: {exc}")
    return out


def groups(values: np.ndarray):
    """Unique values in ascending order with their row masks."""
    for v in np.unique(values):
        yield v, values == v


def save(fig, out):
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150, bbox_inches="tight")
    plt.close(fig)
    if out.stat().st_size == 0:
        die(f"wrote empty image {out}")
    print(f"wrote {out}")


def three_panel(title_a: str, title_b: str, title_c: str):
    fig, axes = plt.subplots(1, 3, figsize=(13, 4))
    for ax, title in zip(axes, (title_a, title_b, title_c)):
        ax.set_title(title)
    return fig, axes
