"""Tests des spectres du champ et de leurs propriétés."""

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis.strategies import floats, sampled_from

from src.led.errors import ParameterValidationError, StabilityViolation, ThresholdSingularity
from src.led.spectra import (
    MediumState,
    SpectrumGridConfig,
    SpectrumVariant,
    c_of_omega,
    default_omega_grid,
    langevin_power_spectrum,
    make_state,
    s_of_omega,
    s_squared,
    spectrum,
    spectrum_derivative,
    spectrum_terms,
    stability_margin
)
from src.led.spectra.field_spectrum import minimum_s_squared, pf_coupling
from src.led.spectra.spectrum_table import spectral_scale

VARIANTS = list(SpectrumVariant)
OMEGA = np.concatenate([[0.0], np.geomspace(1e8, 1e14, 40)])


def _state_below_threshold(rates, ne_fraction, delta_fraction):
    """État sous le seuil effectif: N ≤ N_th et marge de stabilité > 0."""
    N0 = rates.N0
    upper = min(float(N0), 0.5 * (N0 + rates.N_th)) * 0.999
    trial_state = make_state(ne_fraction * upper, N0)
    delta2 = delta_fraction * minimum_s_squared(rates, trial_state) / pf_coupling(rates, 1.0)
    return make_state(trial_state.N_e, N0, min(delta2, 0.25 * N0 * N0))


def test_make_state_populations():
    state = make_state(30.0, 100, 21.0, 0.5)
    assert state.N_g == 70.0
    assert state.N == -40.0
    assert state.delta2_Ne == 21.0


@pytest.mark.parametrize("kwargs", [
    {"N_e": -1.0, "N0": 100},
    {"N_e": 101.0, "N0": 100},
    {"N_e": 10.0, "N0": 100, "delta2_Ne": -1.0},
    {"N_e": 10.0, "N0": 100, "P": -0.1}
])
def test_make_state_rejects_unphysical_values(kwargs):
    with pytest.raises(ParameterValidationError):
        make_state(**kwargs)


def test_variant_parse_is_lenient():
    assert SpectrumVariant.parse("non-perturbative") is SpectrumVariant.NON_PERTURBATIVE
    assert SpectrumVariant.parse("zero_order") is SpectrumVariant.ZERO_ORDER
    with pytest.raises(ValueError):
        SpectrumVariant.parse("second-order")


def test_s_squared_matches_complex_response(non_sr_rates):
    state = make_state(40.0, 100)
    expected = np.abs(s_of_omega(OMEGA, non_sr_rates, state)) ** 2
    np.testing.assert_allclose(s_squared(OMEGA, non_sr_rates, state), expected, rtol=1e-9)


def test_kernel_sign_follows_inversion(non_sr_rates):
    below = make_state(20.0, 100)
    above = make_state(100.0, 100)
    assert np.all(c_of_omega(OMEGA, non_sr_rates, below) >= 0.0)
    assert c_of_omega(0.0, non_sr_rates, above) < 0.0


def test_threshold_singularity_at_semiclassical_threshold(non_sr_rates):
    N_th = non_sr_rates.N_th
    state = MediumState(N_e=0.5 * (100 + N_th), N_g=0.5 * (100 - N_th), N=N_th, delta2_Ne=0.0, P=0.0)
    with pytest.raises(ThresholdSingularity):
        c_of_omega(np.array([0.0, 1e10]), non_sr_rates, state)


def test_scalar_input_returns_scalar(non_sr_rates):
    value = spectrum(0.0, non_sr_rates, make_state(10.0, 100), SpectrumVariant.ZERO_ORDER)
    assert np.ndim(value) == 0


@given(
    omega=floats(min_value=0.0, max_value=1e14, allow_nan=False, allow_infinity=False),
    ne_fraction=floats(min_value=0.0, max_value=1.0),
    delta_fraction=floats(min_value=0.0, max_value=0.9),
    variant=sampled_from(VARIANTS)
)
@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
def test_spectrum_is_even(non_sr_rates, omega, ne_fraction, delta_fraction, variant):
    state = _state_below_threshold(non_sr_rates, ne_fraction, delta_fraction)
    assert spectrum(omega, non_sr_rates, state, variant) == spectrum(-omega, non_sr_rates, state, variant)


@given(
    ne_fraction=floats(min_value=0.0, max_value=1.0),
    delta_fraction=floats(min_value=0.0, max_value=0.9),
    superradiant=sampled_from([False, True])
)
@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
def test_variant_ordering_pointwise(non_sr_rates, sr_rates, ne_fraction, delta_fraction, superradiant):
    rates = sr_rates if superradiant else non_sr_rates
    state = _state_below_threshold(rates, ne_fraction, delta_fraction)
    zero = spectrum(OMEGA, rates, state, SpectrumVariant.ZERO_ORDER)
    spontaneous = spectrum(OMEGA, rates, state, SpectrumVariant.SPONTANEOUS_ONLY)
    full = spectrum(OMEGA, rates, state, SpectrumVariant.NON_PERTURBATIVE)
    assert np.all(spontaneous >= zero * (1.0 - 1e-12))
    assert np.all(full >= spontaneous * (1.0 - 1e-12))


def test_non_perturbative_reduces_to_zero_order_without_dispersion(sr_rates):
    state = make_state(60.0, 100, 0.0)
    np.testing.assert_array_equal(
        spectrum(OMEGA, sr_rates, state, SpectrumVariant.NON_PERTURBATIVE),
        spectrum(OMEGA, sr_rates, state, SpectrumVariant.ZERO_ORDER)
    )


def test_perturbative_error_is_second_order(non_sr_rates):
    base = make_state(50.0, 100)
    scale = 0.5 * minimum_s_squared(non_sr_rates, base) / pf_coupling(non_sr_rates, 1.0)
    epsilons = np.array([1e-2, 1e-3, 1e-4])
    gaps = []
    for eps in epsilons:
        state = make_state(50.0, 100, eps * scale)
        gaps.append(
            spectrum(0.0, non_sr_rates, state, SpectrumVariant.NON_PERTURBATIVE)
            - spectrum(0.0, non_sr_rates, state, SpectrumVariant.PERTURBATIVE)
        )
    slope = np.polyfit(np.log(epsilons), np.log(np.abs(gaps)), 1)[0]
    assert 1.9 <= slope <= 2.1


def test_derivative_matches_central_difference(sr_rates):
    base = make_state(50.0, 100)
    h = 1e-3 * 0.5 * minimum_s_squared(sr_rates, base) / pf_coupling(sr_rates, 1.0)
    omega = np.linspace(0.0, 3.0, 31) * spectral_scale(sr_rates)
    plus = MediumState(base.N_e, base.N_g, base.N, h, 0.0)
    minus = MediumState(base.N_e, base.N_g, base.N, -h, 0.0)
    variant = SpectrumVariant.NON_PERTURBATIVE
    finite = (spectrum(omega, sr_rates, plus, variant) - spectrum(omega, sr_rates, minus, variant)) / (2.0 * h)
    np.testing.assert_allclose(finite, spectrum_derivative(omega, sr_rates, base), rtol=1e-6)


def test_stability_violation_only_for_non_perturbative(non_sr_rates):
    base = make_state(50.0, 100)
    delta2 = 2.0 * minimum_s_squared(non_sr_rates, base) / pf_coupling(non_sr_rates, 1.0)
    state = make_state(50.0, 100, min(delta2, 2500.0))
    if stability_margin(non_sr_rates, state) > 0.0:
        pytest.skip("dispersion bornée à N0²/4: marge toujours positive")
    with pytest.raises(StabilityViolation):
        spectrum(OMEGA, non_sr_rates, state, SpectrumVariant.NON_PERTURBATIVE)
    assert np.all(spectrum(OMEGA, non_sr_rates, state, SpectrumVariant.ZERO_ORDER) > 0.0)


def test_stability_margin_is_affine_in_dispersion(non_sr_rates):
    margins = [stability_margin(non_sr_rates, make_state(40.0, 100, d)) for d in (0.0, 10.0, 20.0)]
    assert margins[0] - margins[1] == pytest.approx(margins[1] - margins[2], rel=1e-9)
    assert margins[0] - margins[1] == pytest.approx(pf_coupling(non_sr_rates, 10.0), rel=1e-9)


def test_spectrum_terms_per_variant(non_sr_rates):
    state = make_state(40.0, 100, 24.0)
    assert len(spectrum_terms(non_sr_rates, state, SpectrumVariant.ZERO_ORDER)) == 1
    assert len(spectrum_terms(non_sr_rates, state, SpectrumVariant.SPONTANEOUS_ONLY)) == 2
    assert len(spectrum_terms(non_sr_rates, state, SpectrumVariant.PERTURBATIVE)) == 3
    assert len(spectrum_terms(non_sr_rates, state, SpectrumVariant.NON_PERTURBATIVE)) == 3
    no_dispersion = make_state(40.0, 100, 0.0)
    assert spectrum_terms(non_sr_rates, no_dispersion, SpectrumVariant.NON_PERTURBATIVE) \
        == spectrum_terms(non_sr_rates, no_dispersion, SpectrumVariant.ZERO_ORDER)


def test_langevin_spectrum_reduces_to_spontaneous_noise(sr_rates):
    state = make_state(50.0, 100)
    assert langevin_power_spectrum(0.0, sr_rates, state, 0.0) == pytest.approx(
        sr_rates.f * sr_rates.gamma_perp * 50.0
    )


def test_default_grid_is_an_exact_mirror(sr_rates):
    grid = default_omega_grid(sr_rates, config=SpectrumGridConfig(n_linear=101, n_log=20))
    np.testing.assert_array_equal(grid, -grid[::-1])
    assert 0.0 in grid
    assert np.all(np.diff(grid) > 0.0)
    assert grid[-1] == pytest.approx(20.0 * spectral_scale(sr_rates))


def test_spectral_scale_covers_rabi_splitting(sr_rates):
    expected = max(sr_rates.kappa, 0.5 * sr_rates.gamma_perp, sr_rates.Omega * np.sqrt(0.5 * 100))
    assert spectral_scale(sr_rates) == expected
