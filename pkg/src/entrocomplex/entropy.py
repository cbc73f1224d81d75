"""Shannon entropy, second-order Renyi entropy, and their difference.

All entropies are in nats. The complexity of a probability vector is
``S - R2``: zero for a point mass, zero for a uniform distribution, positive
in between, which is what makes it useful as a crossover diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .errors import NumericError, ValidationError

NEGATIVE_WEIGHT_TOL = 1e-12
SUM_TOL = 1e-10
COMPLEXITY_FLOOR = -1e-10

_EXPAND_LIMIT = 1 << 22


@dataclass(frozen=True)
class ProbabilityVector:
    """Nonnegative weights summing to one, with degeneracy counts.

    ``weights[k]`` occurs ``counts[k]`` times. A plain distribution has all
    counts equal to one; channel spectra with a (d-1)-fold degenerate
    eigenvalue keep d as a count instead of materializing 2**n entries.
    Weights in [-1e-12, 0) are clamped to zero, then the vector is
    renormalized to unit total weight.
    """

    weights: np.ndarray
    counts: np.ndarray

    def __post_init__(self):
        w = np.atleast_1d(np.asarray(self.weights, dtype=float))
        c = np.atleast_1d(np.asarray(self.counts, dtype=float))
        if w.ndim != 1 or c.shape != w.shape:
            raise ValidationError("weights and counts must be 1-D arrays of equal length")
        if w.size == 0:
            raise ValidationError("empty probability vector")
        if not np.all(np.isfinite(w)) or not np.all(np.isfinite(c)):
            raise ValidationError("weights and counts must be finite")
        if np.any(c < 1):
            raise ValidationError("degeneracy counts must be >= 1")
        if np.any(w < -NEGATIVE_WEIGHT_TOL):
            raise ValidationError(
                f"negative weight beyond tolerance: min={w.min():.3e}"
            )
        w = np.where(w < 0, 0.0, w)
        total = float(np.dot(c, w))
        if abs(total - 1.0) > SUM_TOL:
            raise ValidationError(f"weights sum to {total!r}, expected 1 within {SUM_TOL}")
        if total != 1.0:
            w = w / total
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "counts", c)

    @classmethod
    def from_weights(cls, weights) -> "ProbabilityVector":
        w = np.atleast_1d(np.asarray(weights, dtype=float))
        return cls(w, np.ones_like(w))

    @classmethod
    def from_degenerate(cls, weights, counts) -> "ProbabilityVector":
        return cls(np.asarray(weights, dtype=float), np.asarray(counts, dtype=float))

    @property
    def dim(self) -> int:
        return int(round(float(self.counts.sum())))

    def expanded(self) -> np.ndarray:
        """Materialize the full weight vector (refuses absurd dimensions)."""
        if self.dim > _EXPAND_LIMIT:
            raise ValidationError(f"refusing to expand dimension {self.dim}")
        reps = np.asarray(np.round(self.counts), dtype=np.int64)
        return np.repeat(self.weights, reps)


@dataclass(frozen=True)
class EntropyTriple:
    """Shannon entropy, Renyi-2 entropy, and their difference, in nats."""

    shannon: float
    renyi2: float
    complexity: float
    normalizer: float

    @property
    def normalized_complexity(self) -> float:
        return self.complexity / self.normalizer if self.normalizer > 0 else 0.0


@dataclass(frozen=True)
class DensityMatrixSpectrum:
    """Eigenvalue spectrum of a density matrix, tagged with its origin."""

    source: str
    spectrum: ProbabilityVector


def _coerce(p) -> ProbabilityVector:
    if isinstance(p, ProbabilityVector):
        return p
    return ProbabilityVector.from_weights(p)


def shannon_entropy(p) -> float:
    """-sum(w ln w) with the 0 ln 0 = 0 convention."""
    pv = _coerce(p)
    w, c = pv.weights, pv.counts
    nz = w > 0
    return max(float(-(c[nz] * w[nz] * np.log(w[nz])).sum()), 0.0)


def renyi2_entropy(p) -> float:
    """-ln sum(w**2); the negative log of the purity / inverse participation ratio."""
    pv = _coerce(p)
    return max(float(-np.log(np.dot(pv.counts, pv.weights**2))), 0.0)


def entropic_complexity(p) -> EntropyTriple:
    """Shannon minus Renyi-2 entropy, with ln(dim) attached as the normalizer."""
    pv = _coerce(p)
    s = shannon_entropy(pv)
    r2 = renyi2_entropy(pv)
    return build_triple(s, r2, math.log(pv.dim) if pv.dim > 1 else 0.0)


def build_triple(shannon: float, renyi2: float, normalizer: float) -> EntropyTriple:
    """Assemble an EntropyTriple, absorbing roundoff-negative complexities."""
    c = shannon - renyi2
    if c < COMPLEXITY_FLOOR:
        raise NumericError(
            f"complexity {c:.3e} below floor; shannon={shannon!r} renyi2={renyi2!r}"
        )
    return EntropyTriple(shannon, renyi2, max(c, 0.0), normalizer)


def spectrum_of_density_matrix(rho) -> DensityMatrixSpectrum:
    """Eigenvalues of a real symmetric, unit-trace density matrix.

    Eigenvalues are clamped to [0, 1], renormalized to unit sum, and sorted
    descending so the prominent eigenvalue sits at index 0.
    """
    m = np.asarray(rho, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"density matrix must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("density matrix contains non-finite entries")
    asym = float(np.abs(m - m.T).max())
    if asym > 1e-10:
        raise ValidationError(f"density matrix asymmetric: max |rho - rho.T| = {asym:.3e}")
    tr = float(np.trace(m))
    if abs(tr - 1.0) > 1e-10:
        raise ValidationError(f"density matrix trace {tr!r}, expected 1")
    try:
        evals = np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigendecomposition failed: {exc}") from exc
    evals = np.clip(evals, 0.0, 1.0)
    evals /= evals.sum()
    evals = np.sort(evals)[::-1]
    return DensityMatrixSpectrum(
        source="numeric-eigendecomposition",
        spectrum=ProbabilityVector.from_weights(evals),
    )


def amplitude_weights(v) -> ProbabilityVector:
    """Squared amplitudes of a real vector, normalized to unit sum."""
    a = np.atleast_1d(np.asarray(v, dtype=float))
    if a.ndim != 1:
        raise ValidationError("amplitude vector must be 1-D")
    norm = float(np.dot(a, a))
    if norm <= 0.0 or not np.isfinite(norm):
        raise ValidationError("zero or non-finite amplitude vector")
    return ProbabilityVector.from_weights(a * a / norm)


def batched_entropies(weights: np.ndarray, axis: int = 0):
    """Shannon, Renyi-2, and complexity along one axis of a weight array.

    Each slice along ``axis`` must already be a normalized weight vector;
    no per-slice validation is performed (fast path for eigenvector sweeps).
    Returns three arrays (S, R2, SC) with SC clamped at zero.
    """
    w = np.asarray(weights, dtype=float)
    logw = np.log(np.where(w > 0, w, 1.0))
    s = -(w * logw).sum(axis=axis)
    r2 = -np.log((w * w).sum(axis=axis))
    return s, r2, np.maximum(s - r2, 0.0)
