"""
Module de validation physique des paramètres du dispositif.
Collecte toutes les violations sous forme d'issues plutôt que de s'arrêter à
la première.
"""

import math
from numbers import Integral, Real
from typing import Any, Dict, List

from src.led.params.device_params import DeviceParams
from src.led.params.input_structure import LOWER_BOUNDS, POSITIVE_FIELDS


def _issue(field: str, value: Any, message: str) -> Dict[str, Any]:
    return {
        "type": "invalid_device_parameter",
        "severity": "error",
        "field": field,
        "value": str(value),
        "message": message
    }


def validate_device_params(params: DeviceParams) -> List[Dict[str, Any]]:
    """
    Vérifie la cohérence physique des paramètres du dispositif.

    Args:
        params: Paramètres bruts à contrôler

    Returns:
        Liste des issues détectées (vide si les paramètres sont admissibles)
    """
    issues = []

    for field in POSITIVE_FIELDS + list(LOWER_BOUNDS) + ["f"]:
        value = getattr(params, field)
        if isinstance(value, bool) or not isinstance(value, Real) or not math.isfinite(value):
            issues.append(_issue(field, value, f"Le champ '{field}' doit être un nombre fini"))

    if issues:
        return issues

    for field in POSITIVE_FIELDS:
        value = getattr(params, field)
        if value <= 0:
            issues.append(_issue(field, value, f"Le champ '{field}' doit être strictement positif"))

    for field, lower in LOWER_BOUNDS.items():
        value = getattr(params, field)
        if value < lower:
            issues.append(_issue(field, value, f"Le champ '{field}' doit être ≥ {lower}"))

    if not isinstance(params.N0, Integral):
        issues.append(_issue("N0", params.N0, "Le nombre d'émetteurs N0 doit être entier"))

    if not 0 < params.f <= 1:
        issues.append(_issue("f", params.f, "Le facteur de couplage f doit vérifier 0 < f ≤ 1"))

    return issues
