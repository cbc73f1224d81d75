"""Closed-form spectra and complexity curves for n-qubit noise channels.

Two channels are covered: depolarization of a generalized n-qubit Werner
state (GHZ-type cat state mixed with the maximally mixed state) and pure
dephasing of the same cat state. Everything is evaluated from the analytic
eigenvalues using degeneracy-aware sums, so qubit counts up to n = 63
(Hilbert dimension 2**63) never materialize a full spectrum: formulas use
ln d = n ln 2 and the ratios (d-1)/d, 1/d in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .analysis import golden_section_maximize
from .entropy import EntropyTriple, ProbabilityVector, build_triple
from .errors import ValidationError

LN2 = math.log(2.0)
CHANNELS = ("depolarize", "dephase")

_DENSE_LIMIT = 12


@dataclass(frozen=True)
class ChannelConfig:
    """Qubit count and channel probability."""

    n: int
    p: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValidationError(f"qubit count must be a positive integer, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ValidationError(f"channel probability must lie in [0, 1], got {self.p}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "p", float(self.p))

    @property
    def log_dim(self) -> float:
        return self.n * LN2


@dataclass(frozen=True)
class ChannelSweepRecord:
    """One (n, p) sample of a channel complexity curve."""

    n: int
    p: float
    shannon: float
    renyi2: float
    complexity_raw: float
    complexity_normalized: float


@dataclass(frozen=True)
class PeakRecord:
    """Location and height of the complexity maximum for one qubit count."""

    n: int
    p_star: float
    sc_star_raw: float
    sc_star_normalized: float


def _require_channel(channel: str) -> str:
    if channel not in CHANNELS:
        raise ValidationError(f"unknown channel {channel!r}, expected one of {CHANNELS}")
    return channel


def depolarized_spectrum(cfg: ChannelConfig) -> ProbabilityVector:
    """Spectrum {1 - (d-1)p/d} + (d-1)-fold degenerate {p/d}, compressed."""
    inv_d = 2.0 ** (-cfg.n)
    q = 1.0 - inv_d
    lam1 = 1.0 - q * cfg.p
    return ProbabilityVector.from_degenerate(
        [lam1, cfg.p * inv_d], [1.0, float(2**cfg.n - 1)]
    )


def dephased_spectrum(cfg: ChannelConfig) -> ProbabilityVector:
    """The two nonzero eigenvalues (1 +- (1-p)**n) / 2; the other d-2 vanish."""
    coh = (1.0 - cfg.p) ** cfg.n
    return ProbabilityVector.from_weights([0.5 + 0.5 * coh, 0.5 - 0.5 * coh])


def _two_level_entropies(lam1: float) -> tuple[float, float]:
    lam2 = 1.0 - lam1
    s = 0.0
    if lam1 > 0.0:
        s -= lam1 * math.log(lam1)
    if lam2 > 0.0:
        s -= lam2 * math.log(lam2)
    r2 = -math.log(lam1 * lam1 + lam2 * lam2)
    return s, r2


def depolarized_complexity(cfg: ChannelConfig) -> ChannelSweepRecord:
    """Closed-form entropies of the depolarized cat state.

    Degeneracy-aware sums: the (d-1)-fold term enters as
    (1 - 1/d) * p * (n ln 2 - ln p), never as 2**n individual entries.
    """
    inv_d = 2.0 ** (-cfg.n)
    q = 1.0 - inv_d
    lam1 = 1.0 - q * cfg.p
    s = 0.0
    if lam1 > 0.0:
        s -= lam1 * math.log(lam1)
    if cfg.p > 0.0:
        s += q * cfg.p * (cfg.log_dim - math.log(cfg.p))
    r2 = -math.log(lam1 * lam1 + q * cfg.p * cfg.p * inv_d)
    return _record(cfg, s, r2)


def dephased_complexity(cfg: ChannelConfig) -> ChannelSweepRecord:
    """Closed-form entropies of the dephased cat state (two-level spectrum)."""
    coh = (1.0 - cfg.p) ** cfg.n
    s, r2 = _two_level_entropies(0.5 + 0.5 * coh)
    return _record(cfg, s, r2)


def _record(cfg: ChannelConfig, s: float, r2: float) -> ChannelSweepRecord:
    sc = max(s - r2, 0.0)
    return ChannelSweepRecord(cfg.n, cfg.p, s, r2, sc, sc / cfg.log_dim)


_COMPLEXITY = {"depolarize": depolarized_complexity, "dephase": dephased_complexity}
_SPECTRUM = {"depolarize": depolarized_spectrum, "dephase": dephased_spectrum}


def channel_complexity(channel: str, cfg: ChannelConfig) -> ChannelSweepRecord:
    return _COMPLEXITY[_require_channel(channel)](cfg)


def channel_spectrum(channel: str, cfg: ChannelConfig) -> ProbabilityVector:
    return _SPECTRUM[_require_channel(channel)](cfg)


def channel_sweep(channel: str, n: int, p_values) -> list[ChannelSweepRecord]:
    """Evaluate one channel curve on a grid of probabilities."""
    fn = _COMPLEXITY[_require_channel(channel)]
    return [fn(ChannelConfig(n, float(p))) for p in np.asarray(p_values, dtype=float)]


def channel_peak(channel: str, n: int, tol: float = 1e-10) -> PeakRecord:
    """Locate the complexity maximum on p in [0, 1] by golden section.

    The 1024-point pre-scan inside the maximizer guards against the
    near-endpoint peaks that appear at large n.
    """
    fn = _COMPLEXITY[_require_channel(channel)]

    def objective(p: float) -> float:
        return fn(ChannelConfig(n, min(max(p, 0.0), 1.0))).complexity_raw

    p_star, sc_star = golden_section_maximize(objective, 0.0, 1.0, tol=tol)
    return PeakRecord(n, p_star, sc_star, sc_star / (n * LN2))


def peak_scaling_series(channel: str, n_values) -> list[PeakRecord]:
    """Peak records for an ascending list of qubit counts (n <= 63)."""
    ns = [int(n) for n in n_values]
    if not ns:
        raise ValidationError("empty qubit-count list")
    if any(n < 1 for n in ns):
        raise ValidationError("qubit counts must be >= 1")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValidationError("qubit counts must be strictly ascending")
    if ns[-1] > 63:
        raise ValidationError("qubit counts above 63 are not supported")
    return [channel_peak(channel, n) for n in ns]


def _cat_state(n: int) -> np.ndarray:
    d = 2**n
    v = np.zeros(d)
    v[0] = v[-1] = 1.0 / math.sqrt(2.0)
    return v


def depolarized_density_matrix(cfg: ChannelConfig) -> np.ndarray:
    """Dense (1-p)|cat><cat| + p I/d; for cross-checks at small n."""
    if cfg.n > _DENSE_LIMIT:
        raise ValidationError(f"dense matrix assembly limited to n <= {_DENSE_LIMIT}")
    v = _cat_state(cfg.n)
    d = v.size
    return (1.0 - cfg.p) * np.outer(v, v) + cfg.p * np.eye(d) / d


def dephased_density_matrix(cfg: ChannelConfig) -> np.ndarray:
    """Dense dephased cat state: diagonal halves, coherence damped by (1-p)**n."""
    if cfg.n > _DENSE_LIMIT:
        raise ValidationError(f"dense matrix assembly limited to n <= {_DENSE_LIMIT}")
    d = 2**cfg.n
    rho = np.zeros((d, d))
    rho[0, 0] = rho[-1, -1] = 0.5
    rho[0, -1] = rho[-1, 0] = 0.5 * (1.0 - cfg.p) ** cfg.n
    return rho


def record_triple(rec: ChannelSweepRecord) -> EntropyTriple:
    """Repackage a sweep record as an EntropyTriple (normalizer n ln 2)."""
    return build_triple(rec.shannon, rec.renyi2, rec.n * LN2)
