"""
Construction de DeviceParams à partir d'une section de configuration et
échange 2κ ↔ γ⊥.
"""

import dataclasses
from typing import Any, Mapping

from src.led.errors import ParameterValidationError
from src.led.params.device_params import DeviceParams
from src.led.params.input_structure import DEVICE_DEFAULTS, OPTIONAL_FIELDS, REQUIRED_FIELDS


def device_params_from_dict(mapping: Mapping[str, Any]) -> DeviceParams:
    """
    Construit un DeviceParams depuis la section 'device' de la configuration.

    Les champs optionnels absents reprennent leur valeur par défaut.

    Args:
        mapping: Dictionnaire {champ: valeur}

    Returns:
        Paramètres du dispositif (non encore validés physiquement)

    Raises:
        ParameterValidationError: Champ manquant ou inconnu
    """
    known = set(REQUIRED_FIELDS) | set(OPTIONAL_FIELDS)
    for key in mapping:
        if key not in known:
            raise ParameterValidationError(key, "Champ inconnu dans la section 'device'")

    values = {}
    for field in REQUIRED_FIELDS:
        if field not in mapping:
            raise ParameterValidationError(field, "Champ obligatoire manquant")
        values[field] = mapping[field]
    for field in OPTIONAL_FIELDS:
        values[field] = mapping.get(field, DEVICE_DEFAULTS[field])

    # N0 peut arriver sous forme de flottant entier (ex. 200.0 depuis --set)
    N0 = values["N0"]
    if isinstance(N0, float) and N0.is_integer():
        values["N0"] = int(N0)

    return DeviceParams(**values)


def exchange_rates(params: DeviceParams) -> DeviceParams:
    """Échange 2κ ↔ γ⊥ (κ' = γ⊥/2, γ⊥' = 2κ), les autres champs inchangés."""
    return dataclasses.replace(
        params,
        kappa=params.gamma_perp / 2.0,
        gamma_perp=2.0 * params.kappa
    )
