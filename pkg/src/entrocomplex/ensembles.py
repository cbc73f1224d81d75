"""Random-matrix and many-body ensembles with spectral and eigenstate statistics.

Covers three families driven through the same sweep machinery: a random
diagonal deformed by a GOE matrix, a random diagonal deformed by a two-body
random interaction ensemble in an n-fermion Fock space, and a disordered
spin-1/2 Heisenberg chain in its zero-magnetization sector. Statistics are
the adjacent-gap ratio min(r, 1/r) over the central part of the spectrum and
the Shannon/Renyi-2/complexity averages of eigenvector weights in the
computational basis.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
import math

import numpy as np
import scipy.linalg
import scipy.sparse

from .entropy import EntropyTriple, batched_entropies, build_triple
from .errors import NumericError, ValidationError
from .seeding import as_rng, derive_seed

SPACING_WINDOW_DEFAULT = 0.5
STATE_WINDOW_DEFAULT = 1.0 / 3.0


# ---------------------------------------------------------------------------
# basic containers


@dataclass(frozen=True)
class FockBasis:
    """All m-orbital occupation masks with a fixed particle number.

    Masks are ordered strictly increasing as integers; bit i of a mask is the
    occupation of orbital i.
    """

    m: int
    n: int
    states: np.ndarray
    index: dict = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.states)


@dataclass(frozen=True)
class ManyBodyHamiltonian:
    """Real symmetric Hamiltonian with optional basis labels and sector tag."""

    matrix: object
    basis: np.ndarray | None = None
    sector: str | None = None

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def dense(self) -> np.ndarray:
        if scipy.sparse.issparse(self.matrix):
            return self.matrix.toarray()
        return np.asarray(self.matrix, dtype=float)

    def diagonal(self) -> np.ndarray:
        if scipy.sparse.issparse(self.matrix):
            return np.asarray(self.matrix.diagonal())
        return np.diag(np.asarray(self.matrix))


@dataclass(frozen=True)
class SpectralSample:
    """Eigenvalues (ascending) and eigenvectors of one realization."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None = None
    seed: int | None = None
    window: tuple[int, int] | None = None


@dataclass(frozen=True)
class EnsembleStatRecord:
    """Realization-averaged statistics at one control value."""

    control: float
    mean_r: float
    r_err: float
    mean_shannon: float
    shannon_err: float
    mean_renyi2: float
    renyi2_err: float
    mean_complexity: float
    complexity_err: float
    realizations: int


@dataclass(frozen=True)
class EnsembleConfig:
    """Sweep configuration for one ensemble family.

    kind: "goe" (needs N), "tbre" (needs m, n), or "mbl" (needs L).
    The control value fed by the sweep is the deformation strength for
    goe/tbre and the disorder width for mbl.
    """

    kind: str
    N: int | None = None
    m: int | None = None
    n: int | None = None
    L: int | None = None
    realizations: int = 20
    base_seed: int = 0
    spacing_window: float = SPACING_WINDOW_DEFAULT
    state_window: float = STATE_WINDOW_DEFAULT

    def __post_init__(self):
        if self.kind not in ("goe", "tbre", "mbl"):
            raise ValidationError(f"unknown ensemble kind {self.kind!r}")
        if self.kind == "goe" and (self.N is None or self.N < 2):
            raise ValidationError("goe sweeps need N >= 2")
        if self.kind == "tbre" and (self.m is None or self.n is None):
            raise ValidationError("tbre sweeps need m and n")
        if self.kind == "mbl" and self.L is None:
            raise ValidationError("mbl sweeps need L")
        if self.realizations < 1:
            raise ValidationError("need at least one realization")
        for w in (self.spacing_window, self.state_window):
            if not 0.0 < w <= 1.0:
                raise ValidationError(f"window fraction must lie in (0, 1], got {w}")


# ---------------------------------------------------------------------------
# samplers


def sample_diagonal(N: int, seed_or_rng) -> ManyBodyHamiltonian:
    """N x N diagonal matrix with iid standard-normal entries (stored sparse)."""
    if N < 2:
        raise ValidationError("need N >= 2")
    rng = as_rng(seed_or_rng)
    return ManyBodyHamiltonian(scipy.sparse.diags(rng.standard_normal(N)).tocsr())


def sample_goe(N: int, seed_or_rng) -> ManyBodyHamiltonian:
    """GOE matrix normalized to off-diagonal variance 1/N, diagonal 2/N.

    This pins the semicircle support to about [-2, 2], commensurate with the
    O(1) bandwidth of the standard-normal diagonal, so the deformation
    strength is dimensionless.
    """
    if N < 2:
        raise ValidationError("need N >= 2")
    rng = as_rng(seed_or_rng)
    a = rng.standard_normal((N, N))
    return ManyBodyHamiltonian((a + a.T) / math.sqrt(2.0 * N))


def _as_matrix(h) -> np.ndarray:
    if isinstance(h, ManyBodyHamiltonian):
        return h.dense()
    if scipy.sparse.issparse(h):
        return h.toarray()
    return np.asarray(h, dtype=float)


def deformed_hamiltonian(h0, h1, alpha: float) -> ManyBodyHamiltonian:
    """H0 + alpha * H1."""
    a = _as_matrix(h0)
    b = _as_matrix(h1)
    if a.shape != b.shape:
        raise ValidationError(f"shape mismatch: {a.shape} vs {b.shape}")
    basis = h0.basis if isinstance(h0, ManyBodyHamiltonian) else None
    sector = h0.sector if isinstance(h0, ManyBodyHamiltonian) else None
    return ManyBodyHamiltonian(a + alpha * b, basis=basis, sector=sector)


def diagonalize(h, want_vectors: bool = True, seed: int | None = None) -> SpectralSample:
    """Full dense symmetric eigendecomposition (divide and conquer)."""
    m = _as_matrix(h)
    try:
        if want_vectors:
            evals, evecs = scipy.linalg.eigh(m, driver="evd")
        else:
            evals, evecs = scipy.linalg.eigh(m, eigvals_only=True), None
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as exc:
        raise NumericError(f"eigendecomposition failed: {exc}") from exc
    return SpectralSample(evals, evecs, seed=seed)


# ---------------------------------------------------------------------------
# statistics


def central_window(count: int, fraction: float) -> tuple[int, int]:
    """Index bounds [lo, hi) of the central ``fraction`` of ``count`` items."""
    keep = max(int(round(count * fraction)), 1)
    lo = (count - keep) // 2
    return lo, lo + keep


def gap_ratio_stats(sample: SpectralSample, window: float = SPACING_WINDOW_DEFAULT) -> float:
    """Mean adjacent-gap ratio min(s_k/s_{k-1}, s_{k-1}/s_k) in the window.

    A vanishing larger spacing contributes ratio 0 for that pair.
    """
    evals = np.asarray(sample.eigenvalues, dtype=float)
    lo, hi = central_window(len(evals), window)
    w = evals[lo:hi]
    if len(w) < 3:
        raise ValidationError(f"need at least 3 levels in window, got {len(w)}")
    s = np.diff(w)
    a, b = s[:-1], s[1:]
    big = np.maximum(a, b)
    small = np.minimum(a, b)
    r = np.where(big > 0, small / np.where(big > 0, big, 1.0), 0.0)
    return float(r.mean())


def eigenstate_entropy_stats(sample: SpectralSample,
                             window: float = STATE_WINDOW_DEFAULT) -> EntropyTriple:
    """Average eigenvector entropies over the central window of the spectrum.

    Weights are squared amplitudes in the computational basis; the Renyi-2
    entropy is minus the log of the inverse participation ratio.
    """
    if sample.eigenvectors is None:
        raise ValidationError("sample carries no eigenvectors")
    vecs = sample.eigenvectors
    lo, hi = central_window(vecs.shape[1], window)
    v = vecs[:, lo:hi]
    w = v * v
    w = w / w.sum(axis=0)
    s, r2, _ = batched_entropies(w, axis=0)
    return build_triple(float(s.mean()), float(r2.mean()), math.log(vecs.shape[0]))


# ---------------------------------------------------------------------------
# Fock basis and two-body random interactions


def build_fock_basis(m: int, n: int) -> FockBasis:
    """All C(m, n) occupation masks of n fermions in m orbitals."""
    if not 0 <= n <= m:
        raise ValidationError(f"need 0 <= n <= m, got n={n}, m={m}")
    if m > 62:
        raise ValidationError("orbital count above 62 does not fit a signed mask")
    states = np.array(
        sorted(sum(1 << i for i in combo) for combo in combinations(range(m), n)),
        dtype=np.int64,
    )
    return FockBasis(m, n, states, {int(s): i for i, s in enumerate(states)})


def _orbital_pairs(m: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(m) for j in range(i + 1, m)]


def tbre_hamiltonian(basis: FockBasis, seed_or_rng):
    """Diagonal one-body part and two-body random interaction matrix.

    H0 is diagonal with entries sum of iid standard-normal orbital energies
    over occupied orbitals. H1 applies every c+_i c+_j c_k c_l term (i<j,
    k<l) with real amplitudes V symmetric under (ij) <-> (kl), iid standard
    normal on independent pair indices. Fermionic signs come from the parity
    of occupied orbitals below each operator site, applied right to left.
    Returns (H0 dense-diagonal, H1 sparse CSR), both exactly symmetric.
    """
    rng = as_rng(seed_or_rng)
    m, states = basis.m, basis.states
    d = basis.dimension

    orbital_energies = rng.standard_normal(m)
    occ = ((states[:, None] >> np.arange(m)) & 1).astype(float)
    h0 = ManyBodyHamiltonian(
        np.diag(occ @ orbital_energies), basis=states, sector=f"n={basis.n}"
    )

    pairs = _orbital_pairs(m)
    npairs = len(pairs)
    g = rng.standard_normal((npairs, npairs))
    v = np.triu(g) + np.triu(g, 1).T

    rows, cols, data = [], [], []
    if basis.n >= 2:
        below = [np.int64((1 << o) - 1) for o in range(m)]
        for pb, (k, l) in enumerate(pairs):
            mask_kl = np.int64((1 << k) | (1 << l))
            src = np.nonzero((states & mask_kl) == mask_kl)[0]
            if src.size == 0:
                continue
            s = states[src]
            mid = s ^ mask_kl
            # parity accumulated while annihilating l then k; removing bit l
            # does not change the popcount below k since k < l
            par = np.bitwise_count(s & below[l]) + np.bitwise_count(s & below[k])
            for pa, (i, j) in enumerate(pairs):
                mask_ij = np.int64((1 << i) | (1 << j))
                ok = (mid & mask_ij) == 0
                if not ok.any():
                    continue
                m2 = mid[ok]
                dest = m2 | mask_ij
                sign_par = (
                    par[ok]
                    + np.bitwise_count(m2 & below[j])
                    + np.bitwise_count(m2 & below[i])
                )
                amp = np.where(sign_par & 1, -v[pa, pb], v[pa, pb])
                rows.append(np.searchsorted(states, dest))
                cols.append(src[ok])
                data.append(amp)

    if rows:
        h1 = scipy.sparse.coo_matrix(
            (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
            shape=(d, d),
        ).tocsr()
        h1 = (h1 + h1.T) * 0.5
    else:
        h1 = scipy.sparse.csr_matrix((d, d))
    return h0, ManyBodyHamiltonian(h1, basis=states, sector=f"n={basis.n}")


# ---------------------------------------------------------------------------
# disordered Heisenberg chain


def heisenberg_mbl_hamiltonian(L: int, h: float, seed_or_rng) -> ManyBodyHamiltonian:
    """Open spin-1/2 Heisenberg chain with random fields, S_z = 0 sector.

    J = 1 sets the unit of energy. Matrix elements use spin-1/2 operators:
    diagonal sum of s_i s_{i+1} (s = +-1/2) plus the field term, off-diagonal
    flip-flop amplitude J/2 between masks differing by one adjacent
    anti-aligned pair. Local fields are drawn uniformly from [-h/2, +h/2],
    i.e. ``h`` is the full width of the disorder distribution; under this
    convention the L = 10..16 eigenstate-complexity peak sits near h ~ 4.6.
    """
    if L % 2 != 0:
        raise ValidationError("chain length must be even (S_z = 0 sector)")
    if not 2 <= L <= 16:
        raise ValidationError("chain length limited to 2..16 at full diagonalization")
    if h < 0:
        raise ValidationError("disorder width must be nonnegative")
    rng = as_rng(seed_or_rng)
    fields = rng.uniform(-0.5 * h, 0.5 * h, L)

    states = np.array(
        sorted(sum(1 << i for i in combo) for combo in combinations(range(L), L // 2)),
        dtype=np.int64,
    )
    d = len(states)
    bits = ((states[:, None] >> np.arange(L)) & 1).astype(float)
    sz = bits - 0.5
    diag = (sz[:, :-1] * sz[:, 1:]).sum(axis=1) + sz @ fields

    rows = [np.arange(d)]
    cols = [np.arange(d)]
    data = [diag]
    for i in range(L - 1):
        pair = (states >> i) & 3
        sel = np.nonzero((pair == 1) | (pair == 2))[0]  # bits i, i+1 anti-aligned
        partner = states[sel] ^ (np.int64(3) << i)
        rows.append(np.searchsorted(states, partner))
        cols.append(sel)
        data.append(np.full(sel.size, 0.5))
    hm = scipy.sparse.coo_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(d, d),
    ).tocsr()
    return ManyBodyHamiltonian(hm, basis=states, sector="Sz=0")


# ---------------------------------------------------------------------------
# ensemble sweep


_cached_fock_basis = lru_cache(maxsize=8)(build_fock_basis)


def _realization_matrix(config: EnsembleConfig, control: float, rng) -> np.ndarray:
    if config.kind == "goe":
        h0 = sample_diagonal(config.N, rng)
        h1 = sample_goe(config.N, rng)
        return h0.dense() + control * h1.dense()
    if config.kind == "tbre":
        h0, h1 = tbre_hamiltonian(_cached_fock_basis(config.m, config.n), rng)
        return h0.dense() + control * h1.dense()
    return heisenberg_mbl_hamiltonian(config.L, control, rng).dense()


def _sweep_task(config: EnsembleConfig, control: float, ci: int, ri: int):
    seed = derive_seed(config.base_seed, ci, ri)
    try:
        matrix = _realization_matrix(config, control, as_rng(seed))
        sample = diagonalize(matrix, want_vectors=True, seed=seed)
        r = gap_ratio_stats(sample, config.spacing_window)
        trip = eigenstate_entropy_stats(sample, config.state_window)
    except Exception as exc:
        raise NumericError(
            f"realization failed (control={control}, seed={seed}): {exc}"
        ) from exc
    return r, trip.shannon, trip.renyi2, trip.complexity


def ensemble_sweep(config: EnsembleConfig, control_grid,
                   workers: int = 1) -> list[EnsembleStatRecord]:
    """Realization-averaged gap-ratio and eigenstate-entropy statistics.

    The seed of realization r at control index c is
    derive_seed(base_seed, c, r) and results are reduced in index order, so
    the numbers do not depend on execution order or worker count. A failed
    realization aborts the sweep with its seed reported.
    """
    grid = np.atleast_1d(np.asarray(control_grid, dtype=float))
    tasks = [(config, float(grid[ci]), ci, ri)
             for ci in range(len(grid)) for ri in range(config.realizations)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flat = list(pool.map(_sweep_task_star, tasks, chunksize=4))
    else:
        flat = [_sweep_task(*t) for t in tasks]

    records = []
    per = config.realizations
    for ci in range(len(grid)):
        chunk = np.asarray(flat[ci * per:(ci + 1) * per], dtype=float)
        records.append(_aggregate(float(grid[ci]), chunk[:, 0], chunk[:, 1:]))
    return records


def _sweep_task_star(args):
    return _sweep_task(*args)


def _stderr(x: np.ndarray) -> float:
    if len(x) < 2:
        return 0.0
    return float(x.std(ddof=1) / math.sqrt(len(x)))


def _aggregate(control: float, rs: np.ndarray, trips: np.ndarray) -> EnsembleStatRecord:
    return EnsembleStatRecord(
        control=control,
        mean_r=float(rs.mean()),
        r_err=_stderr(rs),
        mean_shannon=float(trips[:, 0].mean()),
        shannon_err=_stderr(trips[:, 0]),
        mean_renyi2=float(trips[:, 1].mean()),
        renyi2_err=_stderr(trips[:, 1]),
        mean_complexity=float(trips[:, 2].mean()),
        complexity_err=_stderr(trips[:, 2]),
        realizations=len(rs),
    )
