"""Tests de l'intégration, du point de fonctionnement et de l'analyse des pics."""

import dataclasses
import math

import numpy as np
import pytest

from src.led.errors import ParameterValidationError, PFValidityError, ThresholdSingularity, WindowTooNarrow
from src.led.params.derive_rates import derive_rates
from src.led.pf import PFModel, PFTag
from src.led.solver import (
    SolverConfig,
    build_spectrum_table,
    enhancement_factor,
    enhancement_ratio,
    find_crs_peaks,
    integrate_spectrum,
    integrate_spectrum_checked,
    solve_operating_point,
    solve_pump_curve,
    spontaneous_emission_share
)
from src.led.solver.integrate_spectrum import integrate_adaptive, integrate_residue
from src.led.spectra import SpectrumGridConfig, SpectrumTable, SpectrumVariant, make_state
from src.led.spectra.field_spectrum import minimum_s_squared, pf_coupling

NP = SpectrumVariant.NON_PERTURBATIVE
ZO = SpectrumVariant.ZERO_ORDER


@pytest.fixture
def non_sr_top(non_sr_params):
    """Courbe la plus haute: n_c = 2, N0 = 200."""
    return dataclasses.replace(non_sr_params, n_c=2.0, N0=200)


@pytest.fixture
def sr_top(sr_params):
    return dataclasses.replace(sr_params, n_c=2.0, N0=200)


def _symmetric(half):
    return np.concatenate([-half[:0:-1], half])


@pytest.mark.parametrize("superradiant", [False, True])
def test_residue_and_adaptive_backends_agree(non_sr_top, sr_top, superradiant):
    rates = derive_rates(sr_top if superradiant else non_sr_top)
    base = make_state(60.0, 200)
    state = make_state(60.0, 200, 0.7 * minimum_s_squared(rates, base) / pf_coupling(rates, 1.0))
    for variant in SpectrumVariant:
        exact = integrate_residue(rates, state, variant).n
        adaptive = integrate_adaptive(rates, state, variant, SolverConfig()).n
        assert adaptive == pytest.approx(exact, rel=1e-8)


def test_both_backend_reports_deviation(sr_top):
    rates = derive_rates(sr_top)
    state = make_state(40.0, 200, 48.0)
    result = integrate_spectrum_checked(rates, state, NP, SolverConfig(quad_backend="both"))
    assert result.backend == "residue"
    assert result.deviation is not None and result.deviation <= 1e-8
    assert integrate_spectrum(rates, state, NP) == result.n


def test_zero_order_operating_point_closed_form(non_sr_top):
    rates = derive_rates(non_sr_top)
    point = solve_operating_point(0.5, non_sr_top, ZO)
    closed_form = rates.g_diff * point.N_e / (1.0 - point.N / rates.N_th)
    assert point.p_out == pytest.approx(closed_form, rel=1e-9)
    balance = rates.gamma_par * (0.5 * point.N_g - point.N_e)
    assert point.p_out == pytest.approx(balance, rel=1e-8)
    assert point.diagnostics.residual <= 1e-10


def test_zero_pump_gives_dark_device(sr_top):
    point = solve_operating_point(0.0, sr_top, NP)
    assert point.N_e == 0.0
    assert point.p_out == 0.0


def test_negative_pump_rejected(sr_top):
    with pytest.raises(ValueError):
        solve_operating_point(-0.1, sr_top, NP)


def test_integration_at_threshold_signals_singularity(non_sr_rates):
    threshold = make_state(0.5 * (non_sr_rates.N0 + non_sr_rates.N_th), non_sr_rates.N0)
    with pytest.raises(ThresholdSingularity):
        integrate_residue(non_sr_rates, threshold, ZO)


@pytest.mark.parametrize("n_c", [50.0, 10.0, 5.0, 2.0])
def test_zero_order_solves_when_no_field_bound_exceeds_threshold(non_sr_params, n_c):
    params = dataclasses.replace(non_sr_params, n_c=n_c)
    rates = derive_rates(params)
    assert 2.0 * rates.N0 / 3.0 > 0.5 * (rates.N0 + rates.N_th)

    point = solve_operating_point(2.0, params, ZO)
    assert point.N < rates.N_th
    assert point.diagnostics.residual <= 1e-10


def test_pump_curve_keeps_rows_on_any_error(sr_top):
    points, errors = solve_pump_curve([0.5, -1.0], sr_top, NP)
    assert points[0] is not None
    assert points[1] is None
    assert [(error["type"], error["P"]) for error in errors] == [("ValueError", -1.0)]


def test_output_power_increases_with_pump(non_sr_top):
    points, errors = solve_pump_curve([0.05, 0.2, 0.5, 1.0, 2.0], non_sr_top, NP)
    assert errors == []
    powers = [point.p_out for point in points]
    assert all(b > a for a, b in zip(powers, powers[1:]))


def test_pump_curve_is_independent_of_worker_count(sr_top):
    grid = [0.1, 0.5, 1.0, 1.5]
    serial, _ = solve_pump_curve(grid, sr_top, NP, workers=1)
    parallel, _ = solve_pump_curve(grid, sr_top, NP, workers=3)
    assert [p.p_out for p in serial] == [p.p_out for p in parallel]
    assert [p.P for p in parallel] == grid


def test_enhancement_at_least_one_and_larger_for_superradiant(non_sr_top, sr_top):
    non_sr = enhancement_factor(0.5, non_sr_top)
    sr = enhancement_factor(0.5, sr_top)
    assert non_sr >= 1.0
    assert sr > non_sr


def test_enhancement_is_one_without_dispersion(sr_top):
    none = PFModel(PFTag.NONE)
    assert enhancement_factor(1.0, sr_top, none) == 1.0


def test_enhancement_ratio_edge_cases():
    assert enhancement_ratio(0.0, 0.0) == 1.0
    assert math.isinf(enhancement_ratio(1.0, 0.0))
    assert enhancement_ratio(3.0, 2.0) == 1.5


def test_spontaneous_share_larger_for_superradiant(non_sr_top, sr_top):
    assert spontaneous_emission_share(0.5, sr_top) > spontaneous_emission_share(0.5, non_sr_top) >= 0.0


def test_field_dispersion_policy(sr_top):
    langevin = PFModel(PFTag.LANGEVIN_RATE)
    warn = SolverConfig(field_dispersion_limit=1e-12)
    point = solve_operating_point(1.0, sr_top, NP, langevin, warn)
    assert "pf_field_dispersion" in point.diagnostics.warnings

    abort = SolverConfig(field_dispersion_limit=1e-12, field_dispersion_policy="abort")
    with pytest.raises(PFValidityError):
        solve_operating_point(1.0, sr_top, NP, langevin, abort)


def test_diagnostics_are_populated(sr_top):
    point = solve_operating_point(1.0, sr_top, NP)
    diagnostics = point.diagnostics
    assert 0.0 < diagnostics.stability_margin <= 1.0
    assert diagnostics.narrowness_ratio > 0.0
    assert diagnostics.inner_iterations >= 1
    assert diagnostics.quad_deviation is None


@pytest.mark.parametrize("kwargs", [
    {"damping": 0.0},
    {"quad_backend": "simpson"},
    {"ne_tol": -1.0},
    {"field_dispersion_policy": "ignore"}
])
def test_solver_config_validation(kwargs):
    with pytest.raises(ParameterValidationError):
        SolverConfig(**kwargs)


def test_crs_split_for_superradiant_led(sr_top):
    rates = derive_rates(sr_top)
    point = solve_operating_point(1.0, sr_top, NP)
    state = make_state(point.N_e, 200, point.delta2_Ne, 1.0)
    table = build_spectrum_table(rates, state, NP, SpectrumGridConfig())
    assert table.meta["n"] == pytest.approx(point.n, rel=1e-12)
    np.testing.assert_array_equal(table.p_out_of_omega, 2.0 * rates.kappa * table.n_of_omega)
    report = find_crs_peaks(table)
    assert report.is_split
    assert report.peak_positions[0] == -report.peak_positions[1]


def test_peak_finder_on_synthetic_spectra():
    omega = _symmetric(np.linspace(0.0, 20.0, 2001))
    double = 1.0 / ((omega - 5.0) ** 2 + 1.0) + 1.0 / ((omega + 5.0) ** 2 + 1.0)
    report = find_crs_peaks(SpectrumTable(omega, double, double, NP))
    assert report.is_split
    assert report.splitting == pytest.approx(10.0, rel=0.01)

    single = 1.0 / (omega ** 2 + 1.0)
    report = find_crs_peaks(SpectrumTable(omega, single, single, ZO))
    assert not report.is_split
    assert report.splitting == 0.0
    assert report.peak_heights[0] == 1.0


def test_peak_at_window_edge_is_reported():
    omega = _symmetric(np.linspace(0.0, 20.0, 201))
    rising = omega ** 2
    with pytest.raises(WindowTooNarrow):
        find_crs_peaks(SpectrumTable(omega, rising, rising, ZO))
