"""
Largeur spectrale des fluctuations de population.
"""

from src.led.params.device_params import DerivedRates


def pf_bandwidth(n: float, P: float, rates: DerivedRates) -> float:
    """
    Γ_N = γ∥(P + 1) + 2·g·n·f (rad/s).

    Le terme en n représente l'élargissement stimulé; à champ nul on retrouve
    l'amortissement γ∥(P + 1) de l'équation des populations.
    """
    return rates.gamma_par * (P + 1.0) + 2.0 * rates.g_diff * n * rates.f
