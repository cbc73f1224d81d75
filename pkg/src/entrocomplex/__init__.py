"""Entropic complexity toolkit for multi-qubit channels and many-body spectra."""

from .entropy import (
    DensityMatrixSpectrum,
    EntropyTriple,
    ProbabilityVector,
    amplitude_weights,
    batched_entropies,
    entropic_complexity,
    renyi2_entropy,
    shannon_entropy,
    spectrum_of_density_matrix,
)
from .channels import (
    ChannelConfig,
    ChannelSweepRecord,
    PeakRecord,
    channel_peak,
    channel_sweep,
    dephased_complexity,
    dephased_density_matrix,
    dephased_spectrum,
    depolarized_complexity,
    depolarized_density_matrix,
    depolarized_spectrum,
    peak_scaling_series,
)
from .ensembles import (
    EnsembleConfig,
    EnsembleStatRecord,
    FockBasis,
    ManyBodyHamiltonian,
    SpectralSample,
    build_fock_basis,
    deformed_hamiltonian,
    diagonalize,
    eigenstate_entropy_stats,
    ensemble_sweep,
    gap_ratio_stats,
    heisenberg_mbl_hamiltonian,
    sample_diagonal,
    sample_goe,
    tbre_hamiltonian,
)
from .dynamics import (
    ExponentialDecay,
    FlambaumInterpolation,
    GaussianDecay,
    PeakTime,
    SurvivalEnsembleResult,
    SurvivalTrace,
    TanhInterpolation,
    analytic_complexity_trace,
    evolve_basis_state,
    find_trace_peak,
    make_time_grid,
    survival_probability,
    tbre_survival_ensemble,
    thermalized_entropies,
)
from .analysis import (
    CrossoverPoint,
    PowerLawFit,
    collapse_residual,
    crossover_location,
    golden_section_maximize,
    power_law_fit,
)
from .errors import (
    CrossoverNotFoundError,
    DegenerateCurveError,
    DegenerateTraceError,
    EntroComplexError,
    NonUnimodalError,
    NumericError,
    ValidationError,
)
from .seeding import derive_seed

__version__ = "0.1.0"
