"""
Construction des objets de calcul à partir d'une configuration validée.
"""

from typing import Any, Dict

import numpy as np

from src.led.params.build_device_params import device_params_from_dict
from src.led.params.device_params import DeviceParams
from src.led.pf.pf_model import PFModel
from src.led.solver.solver_config import SolverConfig
from src.led.spectra.spectrum_table import SpectrumGridConfig


def device_from_config(config: Dict[str, Any]) -> DeviceParams:
    return device_params_from_dict(config["device"])


def solver_config_from(config: Dict[str, Any]) -> SolverConfig:
    """SolverConfig à partir des sections 'solver' et 'pf'."""
    pf = config.get("pf", {})
    pf_settings = {
        key: pf[key]
        for key in ("narrowness_threshold", "field_dispersion_limit", "field_dispersion_policy")
        if key in pf
    }
    return SolverConfig(**config.get("solver", {}), **pf_settings)


def pf_model_from(config: Dict[str, Any]) -> PFModel:
    return PFModel.from_name(config.get("pf", {}).get("model", "binomial"))


def grid_config_from(config: Dict[str, Any]) -> SpectrumGridConfig:
    spectrum = {key: value for key, value in config.get("spectrum", {}).items() if key != "P"}
    return SpectrumGridConfig(**spectrum)


def pump_grid_from(config: Dict[str, Any]) -> np.ndarray:
    """
    Grille de pompe: liste explicite 'grid' si fournie, sinon 'points' valeurs
    log- ou linéairement espacées dans [P_min, P_max].
    """
    pump = config["pump"]
    if pump.get("grid"):
        return np.asarray(pump["grid"], dtype=float)
    if pump["spacing"] == "log":
        return np.geomspace(pump["P_min"], pump["P_max"], pump["points"])
    return np.linspace(pump["P_min"], pump["P_max"], pump["points"])
