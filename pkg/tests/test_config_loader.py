"""Tests du chargement de la configuration et des surcharges --set."""

import json
import os

import pytest

from src.led.errors import ConfigError
from src.led.runs.input_structure import DEFAULT_CONFIG
from src.utils.config_loader import apply_overrides, load_config, parse_override, validate_config

DEFAULT_JSON = os.path.join(os.path.dirname(__file__), "..", "config", "default.json")


def test_defaults_are_valid():
    assert validate_config(DEFAULT_CONFIG) == []
    assert load_config() == DEFAULT_CONFIG


def test_default_json_matches_defaults():
    with open(DEFAULT_JSON, 'r', encoding='utf-8') as file:
        assert json.load(file) == DEFAULT_CONFIG


@pytest.mark.parametrize("override, expected", [
    ("pf.model=none", ("pf", "model", "none")),
    ("solver.ne_tol=1e-12", ("solver", "ne_tol", 1e-12)),
    ("run.archive=false", ("run", "archive", False)),
    ("pump.grid=[0.5, 1.0]", ("pump", "grid", [0.5, 1.0]))
])
def test_parse_override(override, expected):
    assert parse_override(override) == expected


@pytest.mark.parametrize("override", ["pf.model", "model=none", "a.b.c=1"])
def test_malformed_override(override):
    with pytest.raises(ConfigError):
        parse_override(override)


def test_overrides_do_not_mutate_input():
    config = apply_overrides(DEFAULT_CONFIG, ["device.n_c=2", "device.N0=200"])
    assert config["device"]["n_c"] == 2
    assert config["device"]["N0"] == 200
    assert DEFAULT_CONFIG["device"]["n_c"] == 100.0


@pytest.mark.parametrize("override", ["optics.n_r=3.5", "device.temperature=300"])
def test_unknown_override_target(override):
    with pytest.raises(ConfigError):
        apply_overrides(DEFAULT_CONFIG, [override])


def test_schema_violations_are_collected():
    with pytest.raises(ConfigError) as error:
        load_config(overrides=["pf.model=poisson", "device.N0=2.5", "solver.damping=2"])
    fields = {issue["field"] for issue in error.value.issues}
    assert fields == {"pf.model", "device.N0", "solver.damping"}


def test_file_is_merged_on_defaults(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"device": {"n_c": 2.0}, "pump": {"points": 5}}), encoding='utf-8')
    config = load_config(str(path), ["pf.model=langevin-rate"])
    assert config["device"]["n_c"] == 2.0
    assert config["device"]["kappa"] == DEFAULT_CONFIG["device"]["kappa"]
    assert config["pump"]["points"] == 5
    assert config["pf"]["model"] == "langevin-rate"


def test_unreadable_files(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{device:", encoding='utf-8')
    with pytest.raises(ConfigError):
        load_config(str(broken))


def test_base_file_provides_the_defaults(tmp_path):
    base = tmp_path / "default.json"
    base.write_text(json.dumps({"pump": {"points": 7}, "pf": {"model": "none"}}), encoding='utf-8')
    user = tmp_path / "run.json"
    user.write_text(json.dumps({"pf": {"model": "binomial"}}), encoding='utf-8')

    config = load_config(str(user), defaults_path=str(base))
    assert config["pump"]["points"] == 7
    assert config["pump"]["P_max"] == DEFAULT_CONFIG["pump"]["P_max"]
    assert config["pf"]["model"] == "binomial"


def test_invalid_base_file_is_rejected(tmp_path):
    base = tmp_path / "default.json"
    base.write_text(json.dumps({"solver": {"damping": 3}}), encoding='utf-8')
    with pytest.raises(ConfigError):
        load_config(defaults_path=str(base))
