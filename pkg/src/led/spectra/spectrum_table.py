"""
Tableau échantillonné d'un spectre et grille en ω par défaut.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from src.led.params.device_params import DerivedRates
from src.led.spectra.medium_state import SpectrumVariant


@dataclass(frozen=True)
class SpectrumGridConfig:
    """
    Paramètres de la grille en ω (section 'spectrum' de la configuration).

    Attributes:
        window_factor: Demi-largeur de la fenêtre en unités de
            max(κ, γ⊥/2, Ω·sqrt(f·N0))
        n_linear: Nombre de points linéaires par demi-axe (bornes incluses)
        n_log: Nombre de points logarithmiques par demi-axe
        log_min_fraction: Premier point logarithmique, en fraction de la fenêtre
    """
    window_factor: float = 20.0
    n_linear: int = 1601
    n_log: int = 400
    log_min_fraction: float = 1e-4


@dataclass
class SpectrumTable:
    omega: np.ndarray
    n_of_omega: np.ndarray
    p_out_of_omega: np.ndarray
    variant: SpectrumVariant
    meta: Dict[str, Any] = field(default_factory=dict)


def spectral_scale(rates: DerivedRates, N0: Optional[int] = None, f: Optional[float] = None) -> float:
    """max(κ, γ⊥/2, Ω·sqrt(f·N0)): largeur typique du spectre, pics de CRS compris."""
    N0 = rates.N0 if N0 is None else N0
    f = rates.f if f is None else f
    return max(rates.kappa, 0.5 * rates.gamma_perp, rates.Omega * math.sqrt(f * N0))


def default_omega_grid(
    rates: DerivedRates,
    N0: Optional[int] = None,
    f: Optional[float] = None,
    config: Optional[SpectrumGridConfig] = None
) -> np.ndarray:
    """
    Grille symétrique (miroir exact) densifiée linéairement et au centre.

    Args:
        rates: Constantes dérivées
        N0: Nombre d'émetteurs (par défaut celui de rates)
        f: Facteur de couplage (par défaut celui de rates)
        config: Paramètres de grille

    Returns:
        Tableau croissant d'écarts à ω0 (rad/s), contenant 0
    """
    config = config or SpectrumGridConfig()
    window = config.window_factor * spectral_scale(rates, N0, f)

    linear = np.linspace(0.0, window, config.n_linear)
    logarithmic = np.geomspace(config.log_min_fraction * window, window, config.n_log) \
        if config.n_log > 0 else np.empty(0)
    half = np.unique(np.concatenate([linear, logarithmic]))

    return np.concatenate([-half[:0:-1], half])
