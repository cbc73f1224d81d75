"""Generic numerical post-processing: peak finding, exponent fits, crossovers."""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np
from scipy.signal import find_peaks

from .errors import (
    CrossoverNotFoundError,
    DegenerateCurveError,
    NonUnimodalError,
    ValidationError,
)

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
FLAT_CURVE_TOL = 1e-14


@dataclass(frozen=True)
class PowerLawFit:
    """Least-squares fit of y = prefactor * x**exponent in log-log space."""

    exponent: float
    prefactor: float
    window: tuple[float, float]
    residual: float
    n_points: int


@dataclass(frozen=True)
class CrossoverPoint:
    """Control value where a sampled curve crosses a target level."""

    control: float
    target: float
    bracket: tuple[int, int]


def golden_section_maximize(f, lo: float, hi: float, tol: float = 1e-10,
                            samples: int = 1024):
    """Maximize a unimodal scalar function on [lo, hi].

    A coarse scan seeds the bracket (guarding against peaks hugging an
    endpoint) and doubles as a unimodality check: several separated maxima
    above the noise floor raise NonUnimodalError, a flat curve raises
    DegenerateCurveError. Returns (argmax, max).
    """
    if not lo < hi:
        raise ValidationError(f"need lo < hi, got [{lo}, {hi}]")
    xs = np.linspace(lo, hi, samples + 1)
    ys = np.array([f(x) for x in xs], dtype=float)
    span = float(ys.max() - ys.min())
    if span < FLAT_CURVE_TOL:
        raise DegenerateCurveError(f"curve is flat on [{lo}, {hi}] (span {span:.2e})")
    prominence = max(1e-12, 1e-6 * span)
    peaks, _ = find_peaks(ys, prominence=prominence)
    if len(peaks) > 1:
        raise NonUnimodalError(
            f"{len(peaks)} separated maxima found at x={xs[peaks].tolist()}"
        )
    i = int(np.argmax(ys))
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, samples)]

    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def power_law_fit(x, y, window: tuple[float, float] | None = None) -> PowerLawFit:
    """Fit an exponent by least squares on (ln x, ln y).

    ``window`` restricts the fit to x in [window[0], window[1]] (inclusive).
    All points used must have x > 0 and y > 0.
    """
    xa = np.atleast_1d(np.asarray(x, dtype=float))
    ya = np.atleast_1d(np.asarray(y, dtype=float))
    if xa.shape != ya.shape or xa.ndim != 1:
        raise ValidationError("x and y must be 1-D arrays of equal length")
    if window is not None:
        keep = (xa >= window[0]) & (xa <= window[1])
        xa, ya = xa[keep], ya[keep]
    if xa.size < 3:
        raise ValidationError(f"need at least 3 points in window, got {xa.size}")
    if np.any(xa <= 0) or np.any(ya <= 0):
        raise ValidationError("power-law fit requires strictly positive x and y")
    lx, ly = np.log(xa), np.log(ya)
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = float(np.sqrt(np.mean((ly - (slope * lx + intercept)) ** 2)))
    return PowerLawFit(
        exponent=float(slope),
        prefactor=float(np.exp(intercept)),
        window=(float(xa.min()), float(xa.max())),
        residual=resid,
        n_points=int(xa.size),
    )


def crossover_location(control, values, target: float) -> CrossoverPoint:
    """Linearly interpolate where a sampled curve crosses ``target``.

    Scans for the first pair of adjacent samples straddling the target; the
    curve is expected to be monotone through the target up to noise.
    """
    c = np.atleast_1d(np.asarray(control, dtype=float))
    v = np.atleast_1d(np.asarray(values, dtype=float))
    if c.shape != v.shape or c.size < 2:
        raise ValidationError("need two equal-length arrays with at least 2 samples")
    d = v - target
    for i in range(len(d) - 1):
        if d[i] == 0.0:
            return CrossoverPoint(float(c[i]), target, (i, i))
        if d[i] * d[i + 1] < 0.0:
            frac = d[i] / (v[i] - v[i + 1])
            return CrossoverPoint(float(c[i] + frac * (c[i + 1] - c[i])), target, (i, i + 1))
    if d[-1] == 0.0:
        n = len(d) - 1
        return CrossoverPoint(float(c[-1]), target, (n, n))
    raise CrossoverNotFoundError(
        f"curve (range [{v.min():.4g}, {v.max():.4g}]) never crosses {target}"
    )


def collapse_residual(curves) -> float:
    """Maximum vertical spread between linearly interpolated curves.

    ``curves`` is a sequence of (x, y) array pairs with overlapping x ranges
    after whatever rescaling the caller applied. The spread is evaluated on
    the union of all sample points inside the common domain, which is exact
    for piecewise-linear interpolants.
    """
    prepared = []
    for x, y in curves:
        xa = np.atleast_1d(np.asarray(x, dtype=float))
        ya = np.atleast_1d(np.asarray(y, dtype=float))
        if xa.shape != ya.shape or xa.size < 2:
            raise ValidationError("each curve needs >= 2 (x, y) samples")
        order = np.argsort(xa)
        prepared.append((xa[order], ya[order]))
    if len(prepared) < 2:
        raise ValidationError("need at least two curves")
    lo = max(x[0] for x, _ in prepared)
    hi = min(x[-1] for x, _ in prepared)
    if not lo < hi:
        raise ValidationError(f"curves share no x-domain overlap ([{lo}, {hi}])")
    grid = np.unique(np.concatenate([x[(x >= lo) & (x <= hi)] for x, _ in prepared]))
    stack = np.vstack([np.interp(grid, x, y) for x, y in prepared])
    return float((stack.max(axis=0) - stack.min(axis=0)).max())
