"""Survival-probability models, unitary evolution, and time-dependent complexity.

An initial basis state decays into N chaotic bath states. Under the
thermalization ansatz all bath states share the weight (1 - W0(t))/N, so the
whole time dependence follows from the survival probability W0(t). The
evolution mode instead computes every weight from the eigendecomposition of
the Hamiltonian; the ansatz is never silently substituted.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .ensembles import build_fock_basis, tbre_hamiltonian, _as_matrix
from .entropy import EntropyTriple, batched_entropies, build_triple
from .errors import DegenerateTraceError, ValidationError
from .seeding import as_rng, derive_seed

TIME_GRID_POINTS = 400
TIME_GRID_SPAN = (1e-2, 1e2)


# ---------------------------------------------------------------------------
# survival-probability models


@dataclass(frozen=True)
class ExponentialDecay:
    """W0(t) = exp(-t/T)."""

    T: float

    def __post_init__(self):
        _check_positive("T", self.T)

    @property
    def timescale(self) -> float:
        return self.T

    def survival(self, t):
        return np.exp(-np.asarray(t, dtype=float) / self.T)


@dataclass(frozen=True)
class GaussianDecay:
    """W0(t) = exp(-(t/T)**2)."""

    T: float

    def __post_init__(self):
        _check_positive("T", self.T)

    @property
    def timescale(self) -> float:
        return self.T

    def survival(self, t):
        x = np.asarray(t, dtype=float) / self.T
        return np.exp(-x * x)


@dataclass(frozen=True)
class TanhInterpolation:
    """W0(t) = exp(-(t/T) tanh(t/T)): Gaussian at short, exponential at long times."""

    T: float

    def __post_init__(self):
        _check_positive("T", self.T)

    @property
    def timescale(self) -> float:
        return self.T

    def survival(self, t):
        x = np.asarray(t, dtype=float) / self.T
        return np.exp(-x * np.tanh(x))


@dataclass(frozen=True)
class FlambaumInterpolation:
    """Two-parameter interpolation between Gaussian and exponential decay.

    W0(t) = exp(g^2/(2 d^2) - sqrt(g^4/(4 d^4) + (g t)^2)) with decay rate g
    and density-of-states width d. Short times decay as exp(-(d t)^2), long
    times as exp(g^2/(2 d^2)) exp(-g t).
    """

    gamma: float
    delta: float

    def __post_init__(self):
        _check_positive("gamma", self.gamma)
        _check_positive("delta", self.delta)

    @property
    def timescale(self) -> float:
        return 1.0 / self.gamma

    def survival(self, t):
        a = self.gamma**2 / (2.0 * self.delta**2)
        gt = self.gamma * np.asarray(t, dtype=float)
        return np.exp(a - np.sqrt(a * a + gt * gt))


def _check_positive(name: str, value: float):
    if not value > 0:
        raise ValidationError(f"{name} must be positive, got {value}")


def survival_probability(model, t):
    """Evaluate a model's W0 at nonnegative times (scalar in, scalar out)."""
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0):
        raise ValidationError("times must be nonnegative")
    out = model.survival(arr)
    return float(out) if np.isscalar(t) or arr.ndim == 0 else out


# ---------------------------------------------------------------------------
# thermalization-ansatz entropies


def thermalized_entropies(w0: float, n_states: int) -> EntropyTriple:
    """Entropies of the ansatz distribution {w0} + N copies of (1-w0)/N."""
    if not 0.0 <= w0 <= 1.0:
        raise ValidationError(f"survival probability must lie in [0, 1], got {w0}")
    if int(n_states) != n_states or n_states < 1:
        raise ValidationError(f"bath size must be a positive integer, got {n_states}")
    s, r2 = _ansatz_entropies(np.asarray([w0]), int(n_states))
    return build_triple(float(s[0]), float(r2[0]), math.log(n_states + 1))


def _ansatz_entropies(w0: np.ndarray, n_states: int):
    rest = 1.0 - w0
    s = np.zeros_like(w0)
    nz = w0 > 0
    s[nz] -= w0[nz] * np.log(w0[nz])
    nz = rest > 0
    s[nz] -= rest[nz] * (np.log(rest[nz]) - math.log(n_states))
    r2 = -np.log(w0 * w0 + rest * rest / n_states)
    return s, r2


# ---------------------------------------------------------------------------
# traces


@dataclass(frozen=True)
class SurvivalTrace:
    """Time grid, survival probability, and derived entropies.

    ``per_state_weights`` (times x states) is present in evolution mode only;
    the sum rule sum_j W_j(t) = 1 is enforced there at every time.
    """

    times: np.ndarray
    w0: np.ndarray
    n_states: int
    shannon: np.ndarray
    renyi2: np.ndarray
    complexity: np.ndarray
    per_state_weights: np.ndarray | None = None

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        if t.ndim != 1 or len(t) < 3:
            raise ValidationError("time grid must be 1-D with at least 3 points")
        if np.any(np.diff(t) <= 0) or t[0] != 0.0:
            raise ValidationError("time grid must start at 0 and increase strictly")
        if abs(self.w0[0] - 1.0) > 1e-10:
            raise ValidationError(f"W0(0) = {self.w0[0]!r}, expected 1")
        if self.complexity[0] > 1e-10:
            raise ValidationError("complexity at t = 0 must vanish")
        if self.per_state_weights is not None:
            sums = self.per_state_weights.sum(axis=1)
            defect = float(np.abs(sums - 1.0).max())
            if defect > 1e-10:
                raise ValidationError(f"sum rule violated by {defect:.3e}")


@dataclass(frozen=True)
class PeakTime:
    """Location and height of the complexity maximum of a trace."""

    t_star: float
    sc_max: float
    refinement: str


def make_time_grid(scale: float = 1.0, points: int = TIME_GRID_POINTS,
                   span: tuple[float, float] = TIME_GRID_SPAN) -> np.ndarray:
    """t = 0 followed by log-spaced points on [span[0], span[1]] * scale."""
    if scale <= 0:
        raise ValidationError("time scale must be positive")
    grid = scale * np.logspace(math.log10(span[0]), math.log10(span[1]), points)
    return np.concatenate([[0.0], grid])


def analytic_complexity_trace(model, n_states: int, times=None) -> SurvivalTrace:
    """Thermalization-ansatz entropies along a survival-model trace."""
    if times is None:
        times = make_time_grid(model.timescale)
    t = np.asarray(times, dtype=float)
    w0 = survival_probability(model, t)
    s, r2 = _ansatz_entropies(w0, int(n_states))
    return SurvivalTrace(
        times=t, w0=w0, n_states=int(n_states),
        shannon=s, renyi2=r2, complexity=np.maximum(s - r2, 0.0),
    )


def _weights_from_eigh(evals, evecs, initial_index, times):
    phases = np.exp(-1j * np.outer(times, evals))
    amps = (phases * evecs[initial_index, :]) @ evecs.T
    return np.abs(amps) ** 2


def evolve_basis_state(h, initial_index: int, times=None) -> SurvivalTrace:
    """Exact unitary evolution of one basis state under a symmetric Hamiltonian.

    Complexity is computed from the full per-state weight vector, not the
    thermalization ansatz.
    """
    m = _as_matrix(h)
    d = m.shape[0]
    if not 0 <= initial_index < d:
        raise ValidationError(f"initial index {initial_index} outside dimension {d}")
    if times is None:
        times = make_time_grid(1.0)
    t = np.asarray(times, dtype=float)
    evals, evecs = np.linalg.eigh(m)
    weights = _weights_from_eigh(evals, evecs, initial_index, t)
    s, r2, sc = batched_entropies(weights, axis=1)
    return SurvivalTrace(
        times=t, w0=weights[:, initial_index], n_states=d - 1,
        shannon=s, renyi2=r2, complexity=sc, per_state_weights=weights,
    )


def find_trace_peak(times, values, flat_tol: float = 1e-12) -> PeakTime:
    """Grid argmax with 3-point parabolic refinement in (ln t, value).

    Raises DegenerateTraceError for flat traces or maxima pinned to the grid
    boundary; refinement falls back to the grid point when a neighbor sits at
    t = 0.
    """
    t = np.asarray(times, dtype=float)
    y = np.asarray(values, dtype=float)
    if t.shape != y.shape or t.ndim != 1 or len(t) < 3:
        raise ValidationError("need matching 1-D arrays with at least 3 samples")
    if float(y.max() - y.min()) < flat_tol or y.max() <= flat_tol:
        raise DegenerateTraceError("trace carries no peak above the flat tolerance")
    i = int(np.argmax(y))
    if i == 0 or i == len(y) - 1:
        raise DegenerateTraceError(f"maximum sits on the grid boundary (index {i})")
    if t[i - 1] <= 0.0:
        return PeakTime(float(t[i]), float(y[i]), "grid")
    # exact quadratic through three (ln t, y) samples; valid on uneven grids
    lt = np.log(t[i - 1:i + 2])
    yy = y[i - 1:i + 2]
    d01 = (yy[1] - yy[0]) / (lt[1] - lt[0])
    d12 = (yy[2] - yy[1]) / (lt[2] - lt[1])
    curvature = (d12 - d01) / (lt[2] - lt[0])
    if curvature >= 0.0:
        return PeakTime(float(t[i]), float(y[i]), "grid")
    lt_star = 0.5 * (lt[0] + lt[1]) - d01 / (2.0 * curvature)
    sc_star = yy[0] + d01 * (lt_star - lt[0]) \
        + curvature * (lt_star - lt[0]) * (lt_star - lt[1])
    return PeakTime(float(np.exp(lt_star)), float(sc_star), "parabolic")


# ---------------------------------------------------------------------------
# ensemble dynamics


@dataclass(frozen=True)
class SurvivalEnsembleResult:
    """State- and realization-averaged survival dynamics."""

    times: np.ndarray
    w0_mean: np.ndarray
    complexity_mean: np.ndarray
    peak: PeakTime
    realizations: int
    states_per_realization: int


def _dynamics_task(m: int, n: int, alpha: float, seed: int, t: np.ndarray,
                   states_per_realization: int):
    basis = build_fock_basis(m, n)
    rng = as_rng(seed)
    h0, h1 = tbre_hamiltonian(basis, rng)
    diag = np.diag(h0.dense())
    matrix = h0.dense() + alpha * h1.dense()
    evals, evecs = np.linalg.eigh(matrix)

    order = np.argsort(diag)
    keep = max(len(order) // 3, 1)
    lo = (len(order) - keep) // 2
    central = order[lo:lo + keep]
    count = min(states_per_realization, len(central))
    picks = rng.choice(central, size=count, replace=False)

    w0_sum = np.zeros_like(t)
    sc_sum = np.zeros_like(t)
    for j0 in picks:
        weights = _weights_from_eigh(evals, evecs, int(j0), t)
        _, _, sc = batched_entropies(weights, axis=1)
        w0_sum += weights[:, int(j0)]
        sc_sum += sc
    return w0_sum, sc_sum, count


def _dynamics_task_star(args):
    return _dynamics_task(*args)


def tbre_survival_ensemble(m: int, n: int, alpha: float, realizations: int,
                           base_seed: int, times=None,
                           states_per_realization: int = 10,
                           workers: int = 1) -> SurvivalEnsembleResult:
    """Average survival dynamics over a two-body random interaction ensemble.

    Initial states are basis states whose unperturbed energy lies in the
    central third of the diagonal spectrum, ``states_per_realization`` of
    them drawn without replacement per realization. One eigendecomposition
    per realization is reused across all its initial states and times.
    Realization seeds derive from the base seed, and partial sums are reduced
    in realization order, so worker count never changes the result.
    """
    if realizations < 1:
        raise ValidationError("need at least one realization")
    if alpha < 0:
        raise ValidationError("interaction strength must be nonnegative")
    if times is None:
        times = make_time_grid(1.0 / alpha if alpha > 0 else 1.0)
    t = np.asarray(times, dtype=float)

    tasks = [(m, n, alpha, derive_seed(base_seed, ri), t, states_per_realization)
             for ri in range(realizations)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_dynamics_task_star, tasks))
    else:
        parts = [_dynamics_task(*task) for task in tasks]

    w0_sum = np.zeros_like(t)
    sc_sum = np.zeros_like(t)
    total_states = 0
    for w0_part, sc_part, count in parts:
        w0_sum += w0_part
        sc_sum += sc_part
        total_states += count

    w0_mean = w0_sum / total_states
    sc_mean = sc_sum / total_states
    peak = find_trace_peak(t, sc_mean)
    return SurvivalEnsembleResult(
        times=t, w0_mean=w0_mean, complexity_mean=sc_mean, peak=peak,
        realizations=realizations, states_per_realization=states_per_realization,
    )
