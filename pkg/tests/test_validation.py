"""Tests de la factorisation quartique, des intégrales par résidus et de la batterie."""

import dataclasses
import math

import numpy as np
import pytest
from scipy import integrate

from src.led.spectra import SpectrumVariant, make_state
from src.led.spectra.field_spectrum import denominator_coefficients, minimum_s_squared, pf_coupling
from src.led.solver.integrate_spectrum import integrate_residue
from src.led.validation import closed_form_even_quartic_integrals, factor_quartic, residue_integral


def test_factor_well_separated_quartic():
    # (ω² + 1)(ω² + 4)
    factorization = factor_quartic((4.0, 5.0, 1.0))
    roots = np.sort(np.abs(factorization.roots.imag))
    np.testing.assert_allclose(roots, [1.0, 1.0, 2.0, 2.0], rtol=1e-12)
    assert len(factorization.upper_half_plane_roots()) == 2
    assert not factorization.has_real_roots()
    assert factorization.residual() < 1e-12


def test_factor_quartic_rejects_degenerate_input():
    with pytest.raises(ValueError):
        factor_quartic((1.0, 1.0, 0.0))
    with pytest.raises(ValueError):
        factor_quartic((0.0, 0.0, 1.0))


def test_residue_integral_matches_closed_forms():
    factorization = factor_quartic((4.0, 5.0, 1.0))
    I0, I2 = closed_form_even_quartic_integrals(5.0, 4.0)
    assert I0 == pytest.approx(math.pi / 6.0, rel=1e-14)
    assert I2 == pytest.approx(math.pi / 3.0, rel=1e-14)
    assert residue_integral((1.0,), factorization) == pytest.approx(I0, rel=1e-12)
    assert residue_integral((0.0, 1.0), factorization) == pytest.approx(I2, rel=1e-12)


def test_residue_integral_squared_denominator():
    factorization = factor_quartic((4.0, 5.0, 1.0))
    expected = integrate.quad(lambda w: (1.0 + w * w) / (w ** 4 + 5.0 * w * w + 4.0) ** 2,
                              -np.inf, np.inf, epsabs=0.0, epsrel=1e-12)[0]
    assert residue_integral((1.0, 1.0), factorization, power=2) == pytest.approx(expected, rel=1e-9)


def test_residue_integral_divergence_checks():
    factorization = factor_quartic((4.0, 5.0, 1.0))
    with pytest.raises(ValueError):
        residue_integral((0.0, 0.0, 1.0), factorization)
    with pytest.raises(ValueError):
        residue_integral((1.0,), factorization, power=3)
    with pytest.raises(ValueError):
        residue_integral((1.0,), factor_quartic((-4.0, 3.0, 1.0)))


def test_repeated_roots_fall_back_to_quadrature():
    # (ω² + 1)²: ∫dω/(1 + ω²)² = π/2
    factorization = factor_quartic((1.0, 2.0, 1.0))
    assert residue_integral((1.0,), factorization) == pytest.approx(math.pi / 2.0, rel=1e-8)


def test_closed_form_domain():
    with pytest.raises(ValueError):
        closed_form_even_quartic_integrals(1.0, 0.0)
    with pytest.raises(ValueError):
        closed_form_even_quartic_integrals(-5.0, 1.0)


def test_zero_order_photon_number_closed_form(non_sr_rates):
    state = make_state(30.0, 100)
    c0, c1, _ = denominator_coefficients(non_sr_rates, state, "S")
    I0, _ = closed_form_even_quartic_integrals(c1, c0)
    expected = non_sr_rates.f * non_sr_rates.Omega ** 2 * non_sr_rates.gamma_perp * 30.0 * I0 / (2.0 * math.pi)
    assert integrate_residue(non_sr_rates, state, SpectrumVariant.ZERO_ORDER).n == pytest.approx(expected, rel=1e-10)


def test_denominator_roots_meet_precision_bound(sr_rates):
    base = make_state(50.0, 100)
    state = make_state(50.0, 100, 0.9 * minimum_s_squared(sr_rates, base) / pf_coupling(sr_rates, 1.0))
    factorization = factor_quartic(denominator_coefficients(sr_rates, state, "D"))
    bound = 1e-6 * abs(factorization.leading) * max(sr_rates.kappa, sr_rates.gamma_perp) ** 4
    assert factorization.residual() < bound
    assert not factorization.has_real_roots()


def test_photon_number_is_scale_invariant(sr_rates):
    scale = 7.0
    scaled = dataclasses.replace(
        sr_rates, kappa=scale * sr_rates.kappa, gamma_perp=scale * sr_rates.gamma_perp,
        gamma_par=scale * sr_rates.gamma_par, Omega=scale * sr_rates.Omega, g_diff=scale * sr_rates.g_diff
    )
    base = make_state(30.0, 100)
    state = make_state(30.0, 100, 0.5 * minimum_s_squared(sr_rates, base) / pf_coupling(sr_rates, 1.0))
    variant = SpectrumVariant.NON_PERTURBATIVE
    assert integrate_residue(scaled, state, variant).n == pytest.approx(
        integrate_residue(sr_rates, state, variant).n, rel=1e-10
    )


# Écarts mesurés du modèle binomial de δ²N_e, documentés dans DESIGN.md
BINOMIAL_MODEL_DEVIATIONS = {
    ("enhancement_trend", "non-sr nc2_N200"),
    ("enhancement_trend", "sr nc100_N100"),
    ("enhancement_trend", "sr nc50_N100"),
    ("spontaneous_share", "non-sr P<1"),
}


@pytest.mark.slow
def test_property_suite_completes_with_only_documented_deviations():
    from src.led.validation.property_suite import SUITE_COLUMNS, run_property_suite, suite_passed

    report = run_property_suite()
    assert list(report.columns) == SUITE_COLUMNS
    assert not report["message"].str.contains("ValueError").any()

    strict = report[report["check"].isin(["enhancement_trend", "spontaneous_share", "crs_heights_increase"])]
    assert len(strict) == 2 * 6 + 2 + 2
    assert (strict["severity"] == "error").all()

    failed = report[~report["passed"] & (report["severity"] == "error")]
    failures = set(zip(failed["check"], failed["case"]))
    assert failures <= BINOMIAL_MODEL_DEVIATIONS, failed.to_string()
    assert suite_passed(report) == (not failures)
