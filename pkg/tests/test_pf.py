"""Tests des modèles de dispersion des fluctuations de population."""

import dataclasses
import math

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis.strategies import floats, sampled_from

from src.led.params.derive_rates import derive_rates
from src.led.pf import (
    PFModel,
    PFTag,
    field_dispersion_check,
    narrowness_check,
    pf_bandwidth,
    pf_dispersion
)


@pytest.fixture
def rates_200(non_sr_params):
    return derive_rates(dataclasses.replace(non_sr_params, n_c=2.0, N0=200))


def test_binomial_and_langevin_rate_agree_at_zero_field(rates_200):
    binomial = pf_dispersion(100.0, 0.0, 1.0, rates_200, 200, PFModel(PFTag.BINOMIAL))
    langevin = pf_dispersion(100.0, 0.0, 1.0, rates_200, 200, PFModel(PFTag.LANGEVIN_RATE))
    assert binomial == 50.0
    assert langevin == pytest.approx(50.0, rel=1e-12)


def test_none_model_has_no_dispersion(rates_200):
    assert pf_dispersion(100.0, 3.0, 1.0, rates_200, 200, PFModel(PFTag.NONE)) == 0.0


def test_default_model_is_binomial():
    assert PFModel().tag is PFTag.BINOMIAL
    assert PFModel().name == "binomial"


@pytest.mark.parametrize("name, tag", [
    ("binomial", PFTag.BINOMIAL),
    ("langevin-rate", PFTag.LANGEVIN_RATE),
    ("Langevin_Rate", PFTag.LANGEVIN_RATE),
    ("NONE", PFTag.NONE)
])
def test_model_from_name(name, tag):
    assert PFModel.from_name(name).tag is tag


def test_unknown_model_rejected():
    with pytest.raises(ValueError):
        PFModel.from_name("poisson")


@given(
    ne_fraction=floats(min_value=0.0, max_value=1.0),
    n=floats(min_value=0.0, max_value=1e6, allow_nan=False, allow_infinity=False),
    P=floats(min_value=0.0, max_value=10.0),
    tag=sampled_from(list(PFTag))
)
@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
def test_dispersion_bounded(rates_200, ne_fraction, n, P, tag):
    value = pf_dispersion(200.0 * ne_fraction, n, P, rates_200, 200, PFModel(tag))
    assert 0.0 <= value <= 0.25 * 200 * 200


def test_bandwidth_at_zero_field(rates_200):
    assert pf_bandwidth(0.0, 1.0, rates_200) == pytest.approx(2.0 * rates_200.gamma_par)
    assert pf_bandwidth(10.0, 1.0, rates_200) > pf_bandwidth(0.0, 1.0, rates_200)


def test_narrowness_ratio_for_both_bundles(non_sr_rates, sr_rates):
    for rates in (non_sr_rates, sr_rates):
        ratio, passed = narrowness_check(rates, pf_bandwidth(0.0, 1.0, rates))
        assert ratio == pytest.approx(0.08)
        assert passed


def test_narrowness_threshold_is_inclusive(non_sr_rates):
    ratio, passed = narrowness_check(non_sr_rates, 2.5e9, threshold=0.1)
    assert ratio == pytest.approx(0.1)
    assert passed is (ratio <= 0.1)


def test_field_dispersion_check():
    ratio, passed, issues = field_dispersion_check(100.0, 25.0, limit=0.1)
    assert ratio == pytest.approx(0.05)
    assert passed and issues == []

    ratio, passed, issues = field_dispersion_check(100.0, 400.0, limit=0.1)
    assert ratio == pytest.approx(0.2)
    assert not passed
    assert issues[0]["severity"] == "warning"
    assert issues[0]["type"] == "pf_field_dispersion"


def test_field_dispersion_check_edge_cases():
    assert field_dispersion_check(0.0, 0.0)[0] == 0.0
    assert math.isinf(field_dispersion_check(0.0, 1.0)[0])
    assert field_dispersion_check(50.0, -3.0)[:2] == (0.0, True)
