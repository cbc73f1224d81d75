"""Batch front-end: runs sweeps, writes CSV files plus a JSON run manifest.

Subcommands: channel, rmt-goe, rmt-tbre, mbl, dynamics, tbre-dynamics, fit.
Every run writes its outputs as CSV (17 significant digits, lossless
round-trip) and a ``<out>.manifest.json`` recording the subcommand, the full
parameter set, the base seed, the tool version, the wall-clock duration, and
the produced files. Identical argv and seed reproduce identical numeric CSV
content regardless of thread count.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__, analysis, channels, dynamics, ensembles
from .errors import EntroComplexError, ValidationError

GRID_HELP = (
    "grid syntax: 'start:stop:step' (inclusive of both ends when step divides "
    "the span), 'logspace:start:stop:count', or a comma list like '1,2,4'"
)


def parse_grid(spec: str) -> np.ndarray:
    """Parse a numeric grid specification (see GRID_HELP)."""
    spec = spec.strip()
    if spec.startswith("logspace:"):
        parts = spec.split(":")
        if len(parts) != 4:
            raise ValidationError(f"bad logspace grid {spec!r}; {GRID_HELP}")
        lo, hi, count = float(parts[1]), float(parts[2]), int(parts[3])
        if lo <= 0 or hi <= lo or count < 2:
            raise ValidationError(f"bad logspace grid {spec!r}")
        return np.logspace(math.log10(lo), math.log10(hi), count)
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValidationError(f"bad range grid {spec!r}; {GRID_HELP}")
        start, stop, step = (float(x) for x in parts)
        if step <= 0 or stop < start:
            raise ValidationError(f"bad range grid {spec!r}")
        count = int(round((stop - start) / step))
        grid = start + step * np.arange(count + 1)
        return grid[grid <= stop + 1e-9 * max(abs(stop), 1.0)]
    return np.array([float(x) for x in spec.split(",")], dtype=float)


def parse_int_list(spec: str) -> list[int]:
    return [int(x) for x in spec.split(",")]


def _fmt(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def write_csv(path: Path, header: list[str], rows) -> Path:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(x) for x in row])
    return path


def write_manifest(out: Path, subcommand: str, params: dict, outputs: list[Path],
                   started: float, extra: dict | None = None) -> Path:
    manifest = {
        "subcommand": subcommand,
        "parameters": params,
        "base_seed": params.get("seed"),
        "version": __version__,
        "duration_seconds": time.time() - started,
        "outputs": [str(p) for p in outputs],
    }
    if extra:
        manifest.update(extra)
    path = Path(str(out) + ".manifest.json")
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2, default=str)
        fh.write("\n")
    return path


def peaks_path(out: Path) -> Path:
    return out.with_name(out.stem + ".peaks" + (out.suffix or ".csv"))


def resolve_workers(threads: int | None) -> int:
    if threads is not None:
        return max(threads, 1)
    env = os.environ.get("ENTROCOMPLEX_THREADS")
    if env:
        return max(int(env), 1)
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# subcommand implementations


def cmd_channel(args) -> dict:
    ns = range(args.n_min, args.n_max + 1)
    p_grid = np.linspace(0.0, 1.0, args.grid)
    rows = []
    for n in ns:
        for rec in channels.channel_sweep(args.kind, n, p_grid):
            rows.append((rec.n, rec.p, rec.shannon, rec.renyi2,
                         rec.complexity_raw, rec.complexity_normalized))
    out = Path(args.out)
    write_csv(out, ["n", "p", "S", "R2", "SC_raw", "SC_norm"], rows)

    peaks = channels.peak_scaling_series(args.kind, list(ns))
    prow = [(p.n, p.p_star, p.sc_star_raw, p.sc_star_normalized) for p in peaks]
    pfile = peaks_path(out)
    write_csv(pfile, ["n", "p_star", "SC_star_raw", "SC_star_norm"], prow)

    window = (float(args.fit_min), float(args.fit_max))
    n_arr = np.array([p.n for p in peaks], dtype=float)
    fits = {}
    try:
        if args.kind == "depolarize":
            gamma = analysis.power_law_fit(n_arr, [1.0 - p.p_star for p in peaks], window)
            delta = analysis.power_law_fit(n_arr, [p.sc_star_normalized for p in peaks], window)
            fits = {
                "one_minus_p_star_exponent": gamma.exponent,
                "gamma": -gamma.exponent,
                "sc_star_norm_exponent": delta.exponent,
                "fit_window": window,
            }
        else:
            pfit = analysis.power_law_fit(n_arr, [p.p_star for p in peaks], window)
            fits = {"p_star_exponent": pfit.exponent, "fit_window": window}
    except ValidationError:
        fits = {"note": f"fit window {window} holds fewer than 3 peaks; fits skipped"}
    for key, value in fits.items():
        print(f"{key}: {value}")
    return {"outputs": [out, pfile], "extra": {"fits": fits}}


def _stat_rows(records, prefix):
    for rec in records:
        yield prefix + (rec.control, rec.mean_r, rec.r_err,
                        rec.mean_shannon, rec.shannon_err,
                        rec.mean_renyi2, rec.renyi2_err,
                        rec.mean_complexity, rec.complexity_err,
                        rec.realizations)


_STAT_COLUMNS = ["r_mean", "r_err", "S_mean", "S_err", "R2_mean", "R2_err",
                 "SC_mean", "SC_err", "realizations"]


def cmd_rmt_goe(args) -> dict:
    workers = resolve_workers(args.threads)
    grid = parse_grid(args.alpha_grid)
    rows = []
    for N in parse_int_list(args.N):
        config = ensembles.EnsembleConfig(
            kind="goe", N=N, realizations=args.realizations, base_seed=args.seed,
            spacing_window=args.spacing_window, state_window=args.state_window,
        )
        for row in _stat_rows(ensembles.ensemble_sweep(config, grid, workers), (N,)):
            rows.append(row)
    out = Path(args.out)
    write_csv(out, ["N", "alpha"] + _STAT_COLUMNS, rows)
    return {"outputs": [out]}


def cmd_rmt_tbre(args) -> dict:
    workers = resolve_workers(args.threads)
    grid = parse_grid(args.alpha_grid)
    rows = []
    for n in parse_int_list(args.n):
        basis_dim = math.comb(args.m, n)
        config = ensembles.EnsembleConfig(
            kind="tbre", m=args.m, n=n, realizations=args.realizations,
            base_seed=args.seed, spacing_window=args.spacing_window,
            state_window=args.state_window,
        )
        for row in _stat_rows(ensembles.ensemble_sweep(config, grid, workers),
                              (args.m, n, basis_dim)):
            rows.append(row)
    out = Path(args.out)
    write_csv(out, ["m", "n", "N", "alpha"] + _STAT_COLUMNS, rows)
    return {"outputs": [out]}


def cmd_mbl(args) -> dict:
    workers = resolve_workers(args.threads)
    grid = parse_grid(args.h_grid)
    config = ensembles.EnsembleConfig(
        kind="mbl", L=args.L, realizations=args.realizations, base_seed=args.seed,
        spacing_window=args.spacing_window, state_window=args.state_window,
    )
    records = ensembles.ensemble_sweep(config, grid, workers)
    rows = [(args.L, rec.control, rec.mean_r, rec.r_err, rec.mean_shannon,
             rec.mean_renyi2, rec.mean_complexity, rec.complexity_err,
             rec.realizations) for rec in records]
    out = Path(args.out)
    write_csv(out, ["L", "h", "r_mean", "r_err", "S_mean", "R2_mean",
                    "SC_mean", "SC_err", "realizations"], rows)
    return {"outputs": [out]}


def _build_model(args):
    if args.model == "exponential":
        return dynamics.ExponentialDecay(args.T)
    if args.model == "gaussian":
        return dynamics.GaussianDecay(args.T)
    if args.model == "tanh":
        return dynamics.TanhInterpolation(args.T)
    delta = math.sqrt(args.gamma**2 / args.gamma2_over_delta2)
    return dynamics.FlambaumInterpolation(gamma=args.gamma, delta=delta)


def cmd_dynamics(args) -> dict:
    model = _build_model(args)
    times = dynamics.make_time_grid(model.timescale, args.t_points,
                                    (args.t_min, args.t_max))
    trace = dynamics.analytic_complexity_trace(model, args.n_states, times)
    rows = zip(trace.times, trace.w0, trace.shannon, trace.renyi2, trace.complexity)
    out = Path(args.out)
    write_csv(out, ["t", "W0", "S", "R2", "SC"], rows)
    peak = dynamics.find_trace_peak(trace.times, trace.complexity)
    print(f"t_star: {peak.t_star}")
    print(f"sc_max: {peak.sc_max}")
    return {"outputs": [out],
            "extra": {"peak": {"t_star": peak.t_star, "sc_max": peak.sc_max}}}


def cmd_tbre_dynamics(args) -> dict:
    workers = resolve_workers(args.threads)
    alphas = parse_grid(args.alpha_grid)
    rows, peak_rows = [], []
    for alpha in alphas:
        times = dynamics.make_time_grid(1.0 / alpha, args.t_points)
        result = dynamics.tbre_survival_ensemble(
            args.m, args.n, float(alpha), args.realizations, args.seed,
            times=times, states_per_realization=args.states_per_realization,
            workers=workers,
        )
        for t, w0, sc in zip(result.times, result.w0_mean, result.complexity_mean):
            rows.append((args.m, args.n, alpha, t, w0, sc))
        peak_rows.append((args.m, args.n, alpha, result.peak.t_star, result.peak.sc_max))
    out = Path(args.out)
    write_csv(out, ["m", "n", "alpha", "t", "W0_mean", "SC_mean"], rows)
    pfile = peaks_path(out)
    write_csv(pfile, ["m", "n", "alpha", "t_star", "SC_max"], peak_rows)

    extra = {}
    if len(alphas) >= 3:
        fit = analysis.power_law_fit([r[2] for r in peak_rows],
                                     [r[3] for r in peak_rows])
        extra = {"t_star_alpha_exponent": fit.exponent}
        print(f"t_star_alpha_exponent: {fit.exponent}")
    return {"outputs": [out, pfile], "extra": extra}


def cmd_fit(args) -> dict:
    with open(args.input, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or args.x_col not in reader.fieldnames \
                or args.y_col not in reader.fieldnames:
            raise ValidationError(
                f"columns {args.x_col!r}/{args.y_col!r} not found in "
                f"{args.input} (have {reader.fieldnames})"
            )
        data = [(float(row[args.x_col]), float(row[args.y_col])) for row in reader]
    x = np.array([d[0] for d in data])
    y = np.array([d[1] for d in data])
    window = None
    if args.window:
        lo, hi = (float(v) for v in args.window.split(":"))
        window = (lo, hi)
    if args.kind == "power":
        fit = analysis.power_law_fit(x, y, window)
        result = {"kind": "power", "exponent": fit.exponent, "prefactor": fit.prefactor,
                  "window": list(fit.window), "residual": fit.residual,
                  "n_points": fit.n_points}
    else:
        if args.target is None:
            raise ValidationError("--target is required for crossover fits")
        cross = analysis.crossover_location(x, y, args.target)
        result = {"kind": "crossover", "control": cross.control,
                  "target": cross.target, "bracket": list(cross.bracket)}
    out = Path(args.out)
    with open(out, "w") as fh:
        json.dump(result, fh, indent=2)
        fh.write("\n")
    print(json.dumps(result))
    return {"outputs": [out]}


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entrocomplex",
        description="Entropic-complexity sweeps for qubit channels, random-matrix "
                    "ensembles, disordered spin chains, and survival dynamics.",
        epilog=GRID_HELP,
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, seeded=True, threaded=True):
        p.add_argument("--out", required=True, help="output CSV path")
        if seeded:
            p.add_argument("--seed", type=int, default=0, help="base seed")
        if threaded:
            p.add_argument("--threads", type=int, default=None,
                           help="worker processes (default: available parallelism; "
                                "ENTROCOMPLEX_THREADS overrides)")

    p = sub.add_parser("channel", help="closed-form channel sweeps, peaks, scaling fits")
    p.add_argument("--kind", choices=channels.CHANNELS, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=63)
    p.add_argument("--grid", type=int, default=2001, help="number of p samples")
    p.add_argument("--fit-min", type=int, default=8, help="exponent-fit window start")
    p.add_argument("--fit-max", type=int, default=63, help="exponent-fit window end")
    common(p, threaded=False)
    p.set_defaults(func=cmd_channel)

    p = sub.add_parser("rmt-goe", help="deformed-GOE spectral and eigenstate sweep")
    p.add_argument("--N", required=True, help="comma list of matrix sizes")
    p.add_argument("--alpha-grid", required=True, help=GRID_HELP)
    p.add_argument("--realizations", type=int, default=100)
    p.add_argument("--spacing-window", type=float, default=0.5)
    p.add_argument("--state-window", type=float, default=1.0 / 3.0)
    common(p)
    p.set_defaults(func=cmd_rmt_goe)

    p = sub.add_parser("rmt-tbre", help="deformed-TBRE spectral and eigenstate sweep")
    p.add_argument("--m", type=int, required=True, help="orbital count")
    p.add_argument("--n", required=True, help="comma list of particle numbers")
    p.add_argument("--alpha-grid", required=True, help=GRID_HELP)
    p.add_argument("--realizations", type=int, default=50)
    p.add_argument("--spacing-window", type=float, default=0.5)
    p.add_argument("--state-window", type=float, default=1.0 / 3.0)
    common(p)
    p.set_defaults(func=cmd_rmt_tbre)

    p = sub.add_parser("mbl", help="disordered Heisenberg chain sweep")
    p.add_argument("--L", type=int, default=12, help="even chain length")
    p.add_argument("--h-grid", required=True, help=GRID_HELP)
    p.add_argument("--realizations", type=int, default=200)
    p.add_argument("--spacing-window", type=float, default=0.5)
    p.add_argument("--state-window", type=float, default=1.0 / 3.0)
    common(p)
    p.set_defaults(func=cmd_mbl)

    p = sub.add_parser("dynamics", help="analytic survival-probability traces")
    p.add_argument("--model", choices=("exponential", "gaussian", "tanh", "flambaum"),
                   required=True)
    p.add_argument("--T", type=float, default=1.0, help="decay timescale")
    p.add_argument("--gamma", type=float, default=1.0, help="long-time decay rate")
    p.add_argument("--gamma2-over-delta2", type=float, default=2.0,
                   help="interpolation shape ratio")
    p.add_argument("--n-states", type=int, default=1000, help="bath dimension")
    p.add_argument("--t-points", type=int, default=400)
    p.add_argument("--t-min", type=float, default=1e-2, help="grid start, units of timescale")
    p.add_argument("--t-max", type=float, default=1e2, help="grid end, units of timescale")
    common(p, seeded=False, threaded=False)
    p.set_defaults(func=cmd_dynamics)

    p = sub.add_parser("tbre-dynamics", help="TBRE survival dynamics, t* vs alpha")
    p.add_argument("--m", type=int, default=12)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--alpha-grid", required=True, help=GRID_HELP)
    p.add_argument("--realizations", type=int, default=20)
    p.add_argument("--states-per-realization", type=int, default=10)
    p.add_argument("--t-points", type=int, default=400)
    common(p)
    p.set_defaults(func=cmd_tbre_dynamics)

    p = sub.add_parser("fit", help="re-run analysis on an existing CSV")
    p.add_argument("--input", required=True, help="input CSV path")
    p.add_argument("--x-col", required=True)
    p.add_argument("--y-col", required=True)
    p.add_argument("--kind", choices=("power", "crossover"), default="power")
    p.add_argument("--window", default=None, help="x window 'lo:hi'")
    p.add_argument("--target", type=float, default=None, help="crossover target level")
    common(p, seeded=False, threaded=False)
    p.set_defaults(func=cmd_fit)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.time()
    try:
        result = args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EntroComplexError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 1
    params = {k: v for k, v in vars(args).items() if k != "func"}
    write_manifest(Path(args.out), args.subcommand, params,
                   result.get("outputs", []), started, result.get("extra"))
    return 0


def main(argv=None) -> int:
    return run(argv)
