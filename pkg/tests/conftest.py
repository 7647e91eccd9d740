"""Jeux de paramètres partagés par les tests."""

import copy

import pytest

from src.led.params.build_device_params import exchange_rates
from src.led.params.derive_rates import derive_rates
from src.led.params.device_params import DeviceParams
from src.led.params.input_structure import DEVICE_DEFAULTS
from src.led.runs.input_structure import DEFAULT_CONFIG


@pytest.fixture
def non_sr_params():
    """LED non superradiante, n_c = 100, N0 = 100."""
    return DeviceParams(**DEVICE_DEFAULTS)


@pytest.fixture
def sr_params(non_sr_params):
    """LED superradiante (2κ ↔ γ⊥ échangés)."""
    return exchange_rates(non_sr_params)


@pytest.fixture
def non_sr_rates(non_sr_params):
    return derive_rates(non_sr_params)


@pytest.fixture
def sr_rates(sr_params):
    return derive_rates(sr_params)


@pytest.fixture
def small_config(tmp_path):
    """Configuration réduite: deux pompes, grille spectrale grossière, sorties dans tmp_path."""
    config = copy.deepcopy(DEFAULT_CONFIG)
    config["pump"]["grid"] = [0.1, 1.0]
    config["spectrum"]["n_linear"] = 201
    config["spectrum"]["n_log"] = 50
    config["run"]["out"] = str(tmp_path / "outputs")
    config["run"]["log_dir"] = str(tmp_path / "logs")
    return config
