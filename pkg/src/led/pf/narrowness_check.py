"""
Contrôles de validité de l'approximation des fluctuations étroites.
"""

import math
from typing import Any, Dict, List, Tuple

from src.led.params.device_params import DerivedRates


def narrowness_check(rates: DerivedRates, bandwidth: float, threshold: float = 0.1) -> Tuple[float, bool]:
    """
    Rapport Γ_N/min(κ, γ⊥/2) et verdict (le seuil est inclusif).

    Args:
        rates: Constantes dérivées
        bandwidth: Largeur Γ_N (rad/s)
        threshold: Seuil de validité

    Returns:
        Tuple (rapport, True si rapport ≤ seuil)
    """
    ratio = bandwidth / min(rates.kappa, 0.5 * rates.gamma_perp)
    return ratio, ratio <= threshold


def field_dispersion_check(
    N_e: float,
    delta2_field: float,
    limit: float = 0.1
) -> Tuple[float, bool, List[Dict[str, Any]]]:
    """
    Condition (δ²N_e)_f^{1/2} ≪ N_e, où (δ²N_e)_f = δ²N_e(n) − δ²N_e(n = 0)
    est la part de la dispersion induite par le champ.

    Args:
        N_e: Population du niveau haut
        delta2_field: Part induite par le champ (une valeur négative compte pour 0)
        limit: Rapport maximal admis

    Returns:
        Tuple contenant:
        - Le rapport sqrt((δ²N_e)_f)/N_e (0 si N_e = 0 et δ²N_e_f = 0)
        - True si le rapport est ≤ limit
        - La liste des issues (un avertissement en cas d'échec)
    """
    spread = math.sqrt(max(delta2_field, 0.0))
    if N_e > 0.0:
        ratio = spread / N_e
    else:
        ratio = 0.0 if spread == 0.0 else math.inf

    passed = ratio <= limit
    issues = []
    if not passed:
        issues.append({
            "type": "pf_field_dispersion",
            "severity": "warning",
            "field": "delta2_Ne",
            "ratio": ratio,
            "message": f"Dispersion induite par le champ non négligeable: sqrt(δ²N_e_f)/N_e = {ratio:.3g} > {limit}"
        })
    return ratio, passed, issues
