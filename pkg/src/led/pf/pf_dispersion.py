"""
Dispersion des fluctuations de population δ²N_e(N_e, n, P).
"""

from src.led.params.device_params import DerivedRates
from src.led.pf.pf_bandwidth import pf_bandwidth
from src.led.pf.pf_model import PFModel, PFTag


def pf_dispersion(N_e: float, n: float, P: float, rates: DerivedRates, N0: int, model: PFModel) -> float:
    """
    Calcule δ²N_e pour le modèle choisi.

    - binomial: N_e·N_g/N0, variance stationnaire de N0 émetteurs indépendants
      à deux niveaux; la dépendance en n passe par N_e(n).
    - langevin-rate: [γ∥(P·N_g + N_e) + 2·g·n·f·N0]/(2·Γ_N), variance
      stationnaire de l'équation des populations linéarisée.
    - none: 0.

    Le résultat est borné à [0, N0²/4].

    Args:
        N_e: Population du niveau haut (0 ≤ N_e ≤ N0)
        n: Nombre moyen de photons (≥ 0)
        P: Pompe normalisée (≥ 0)
        rates: Constantes dérivées
        N0: Nombre d'émetteurs
        model: Modèle de dispersion

    Returns:
        δ²N_e (sans dimension)
    """
    N_g = N0 - N_e

    if model.tag is PFTag.NONE:
        return 0.0

    if model.tag is PFTag.BINOMIAL:
        value = N_e * N_g / N0
    else:
        bandwidth = pf_bandwidth(n, P, rates)
        if bandwidth <= 0.0:
            return 0.0
        diffusion = rates.gamma_par * (P * N_g + N_e) + 2.0 * rates.g_diff * n * rates.f * N0
        value = diffusion / (2.0 * bandwidth)

    return min(max(value, 0.0), 0.25 * N0 * N0)
