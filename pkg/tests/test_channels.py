import math

import numpy as np
import pytest

from entrocomplex import (
    ChannelConfig,
    ValidationError,
    channel_peak,
    channel_sweep,
    dephased_complexity,
    dephased_density_matrix,
    dephased_spectrum,
    depolarized_complexity,
    depolarized_density_matrix,
    depolarized_spectrum,
    entropic_complexity,
    peak_scaling_series,
    renyi2_entropy,
    shannon_entropy,
    spectrum_of_density_matrix,
)

LN2 = math.log(2.0)

# two-level optimum, frozen from a 40-digit root of the stationarity condition
TWO_LEVEL_SC_MAX = 0.1299541255944838
TWO_LEVEL_LAMBDA = 0.8715807313398744
DEPOL_N1_P_STAR = 0.2568385373202511


def test_config_validation():
    with pytest.raises(ValidationError):
        ChannelConfig(0, 0.5)
    with pytest.raises(ValidationError):
        ChannelConfig(2, 1.5)
    with pytest.raises(ValidationError):
        ChannelConfig(2, -0.1)


def test_depolarized_spectrum_n2():
    pv = depolarized_spectrum(ChannelConfig(2, 0.5))
    assert np.allclose(pv.weights, [0.625, 0.125])
    assert np.allclose(pv.counts, [1, 3])


def test_depolarized_spectrum_unperturbed():
    pv = depolarized_spectrum(ChannelConfig(3, 0.0))
    assert np.allclose(pv.weights, [1.0, 0.0])
    assert np.allclose(pv.counts, [1, 7])


def test_depolarized_spectrum_single_qubit_mixed():
    pv = depolarized_spectrum(ChannelConfig(1, 1.0))
    assert np.allclose(pv.weights, [0.5, 0.5])


def test_dephased_spectrum_pure():
    pv = dephased_spectrum(ChannelConfig(4, 0.0))
    assert np.allclose(pv.weights, [1.0, 0.0])


def test_dephased_spectrum_n2():
    pv = dephased_spectrum(ChannelConfig(2, 0.5))
    assert np.allclose(pv.weights, [0.625, 0.375])


def test_single_qubit_channels_coincide():
    for p in np.linspace(0.0, 1.0, 21):
        a = depolarized_complexity(ChannelConfig(1, p))
        b = dephased_complexity(ChannelConfig(1, p))
        assert a.complexity_raw == pytest.approx(b.complexity_raw, abs=1e-14)


def test_depolarized_reference_value():
    rec = depolarized_complexity(ChannelConfig(2, 0.5))
    assert rec.complexity_raw == pytest.approx(0.2468642732240553, abs=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3, 8, 32, 63])
@pytest.mark.parametrize("kind", ["depolarize", "dephase"])
def test_endpoint_zeros(n, kind):
    fn = depolarized_complexity if kind == "depolarize" else dephased_complexity
    assert fn(ChannelConfig(n, 0.0)).complexity_raw <= 1e-12
    assert fn(ChannelConfig(n, 1.0)).complexity_raw <= 1e-12
    assert fn(ChannelConfig(n, 0.0)).complexity_normalized <= 1e-12
    assert fn(ChannelConfig(n, 1.0)).complexity_normalized <= 1e-12


@pytest.mark.parametrize("n", [1, 2, 4, 6, 20, 63])
def test_closed_form_matches_compressed_spectrum(n):
    for p in (0.1, 0.5, 0.9):
        rec = depolarized_complexity(ChannelConfig(n, p))
        pv = depolarized_spectrum(ChannelConfig(n, p))
        assert rec.shannon == pytest.approx(shannon_entropy(pv), abs=1e-12)
        assert rec.renyi2 == pytest.approx(renyi2_entropy(pv), abs=1e-12)

        rec = dephased_complexity(ChannelConfig(n, p))
        pv = dephased_spectrum(ChannelConfig(n, p))
        assert rec.shannon == pytest.approx(shannon_entropy(pv), abs=1e-12)
        assert rec.renyi2 == pytest.approx(renyi2_entropy(pv), abs=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_closed_form_matches_dense_eigensolver(n):
    for p in np.linspace(0.0, 1.0, 11):
        cfg = ChannelConfig(n, p)
        for closed, dense in (
            (depolarized_complexity, depolarized_density_matrix),
            (dephased_complexity, dephased_density_matrix),
        ):
            rec = closed(cfg)
            trip = entropic_complexity(spectrum_of_density_matrix(dense(cfg)).spectrum)
            assert rec.complexity_raw == pytest.approx(trip.complexity, abs=1e-10)


@pytest.mark.parametrize("n", [5, 6])
def test_eigensolver_spectrum_matches_closed_form(n):
    for p in (0.15, 0.6, 0.95):
        cfg = ChannelConfig(n, p)
        numeric = spectrum_of_density_matrix(depolarized_density_matrix(cfg))
        closed = np.sort(depolarized_spectrum(cfg).expanded())[::-1]
        assert np.abs(numeric.spectrum.weights - closed).max() < 1e-10

        numeric = spectrum_of_density_matrix(dephased_density_matrix(cfg))
        closed = np.zeros(2**n)
        closed[:2] = dephased_spectrum(cfg).weights
        assert np.abs(numeric.spectrum.weights - closed).max() < 1e-10


def test_dephased_value_near_optimum_lambda():
    # lambda1 = 0.8715 sits next to the optimum; the height is flat there
    p = 1.0 - (2 * 0.8715 - 1.0) ** 0.25
    rec = dephased_complexity(ChannelConfig(4, p))
    assert rec.complexity_raw == pytest.approx(TWO_LEVEL_SC_MAX, abs=1e-6)


def test_two_qubit_formula_reduction():
    # closed form at n = 2 against the direct 4-level expression
    for p in np.linspace(0.01, 0.99, 23):
        l1 = 1.0 - 0.75 * p
        expected = (
            -l1 * math.log(l1)
            - 3 * (p / 4) * math.log(p / 4)
            + math.log(1 - 1.5 * p + 0.75 * p * p)
        )
        rec = depolarized_complexity(ChannelConfig(2, p))
        assert rec.complexity_raw == pytest.approx(expected, abs=1e-12)


def test_single_qubit_formula_reduction():
    for p in np.linspace(0.01, 0.99, 23):
        expected = (
            -(p / 2) * math.log(p / 2)
            - (1 - p / 2) * math.log(1 - p / 2)
            + math.log(1 - p + p * p / 2)
        )
        rec = depolarized_complexity(ChannelConfig(1, p))
        assert rec.complexity_raw == pytest.approx(expected, abs=1e-12)


def test_depolarize_peak_single_qubit():
    pk = channel_peak("depolarize", 1)
    assert pk.p_star == pytest.approx(DEPOL_N1_P_STAR, abs=1e-7)
    assert pk.sc_star_raw == pytest.approx(TWO_LEVEL_SC_MAX, abs=1e-12)


def test_dephase_peak_matches_depolarize_at_n1():
    a = channel_peak("depolarize", 1)
    b = channel_peak("dephase", 1)
    assert a.p_star == pytest.approx(b.p_star, abs=1e-7)
    assert a.sc_star_raw == pytest.approx(b.sc_star_raw, abs=1e-12)


@pytest.mark.parametrize("n", [1, 2, 5, 16, 40, 63])
def test_dephase_peak_height_independent_of_n(n):
    pk = channel_peak("dephase", n)
    assert pk.sc_star_raw == pytest.approx(TWO_LEVEL_SC_MAX, abs=1e-6)
    assert 0.0 < pk.p_star < 1.0


@pytest.mark.parametrize("n", [4, 8, 16, 32, 63])
def test_dephase_peak_location_formula(n):
    # peak probability maps to the fixed two-level optimum lambda
    expected = 1.0 - (2.0 * TWO_LEVEL_LAMBDA - 1.0) ** (1.0 / n)
    pk = channel_peak("dephase", n)
    assert pk.p_star == pytest.approx(expected, rel=1e-5)


def test_depolarize_peak_moves_towards_one():
    series = peak_scaling_series("depolarize", list(range(1, 33)))
    gaps = [1.0 - rec.p_star for rec in series]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))


def test_scaling_series_validation():
    with pytest.raises(ValidationError):
        peak_scaling_series("depolarize", [4, 2])
    with pytest.raises(ValidationError):
        peak_scaling_series("depolarize", [1, 64])
    with pytest.raises(ValidationError):
        peak_scaling_series("warp", [1, 2])


def test_channel_sweep_rows():
    recs = channel_sweep("dephase", 3, np.linspace(0, 1, 5))
    assert len(recs) == 5
    assert recs[0].complexity_raw <= 1e-12
    assert all(r.complexity_normalized == pytest.approx(r.complexity_raw / (3 * LN2))
               for r in recs)


def test_dense_matrices_are_valid_density_matrices():
    for builder in (depolarized_density_matrix, dephased_density_matrix):
        rho = builder(ChannelConfig(3, 0.3))
        assert rho.shape == (8, 8)
        assert np.trace(rho) == pytest.approx(1.0, abs=1e-14)
        assert np.abs(rho - rho.T).max() == 0.0


def test_dense_matrix_size_guard():
    with pytest.raises(ValidationError):
        depolarized_density_matrix(ChannelConfig(13, 0.5))


def test_large_n_normalized_curve_vanishes_at_ends():
    recs = channel_sweep("depolarize", 63, [0.0, 1.0])
    assert recs[0].complexity_normalized <= 1e-12
    assert recs[1].complexity_normalized <= 1e-12
