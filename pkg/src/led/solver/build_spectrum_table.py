"""
Échantillonnage d'un spectre sur une grille en ω, avec son intégrale.
"""

from typing import Optional

import numpy as np

from src.led.params.device_params import DerivedRates
from src.led.solver.integrate_spectrum import integrate_spectrum_checked
from src.led.solver.solver_config import SolverConfig
from src.led.spectra.field_spectrum import spectrum
from src.led.spectra.medium_state import MediumState, SpectrumVariant
from src.led.spectra.spectrum_table import SpectrumGridConfig, SpectrumTable, default_omega_grid


def build_spectrum_table(
    rates: DerivedRates,
    state: MediumState,
    variant: SpectrumVariant,
    grid_config: Optional[SpectrumGridConfig] = None,
    solver_config: Optional[SolverConfig] = None,
    omega: Optional[np.ndarray] = None
) -> SpectrumTable:
    """
    Construit un SpectrumTable.

    Args:
        rates: Constantes dérivées
        state: État du milieu
        variant: Traitement des fluctuations
        grid_config: Paramètres de la grille par défaut
        solver_config: Réglages de l'intégration
        omega: Grille imposée (sinon grille par défaut)

    Returns:
        Spectre tabulé; meta contient la fenêtre, le nombre de points, n intégré
        et son erreur estimée
    """
    variant = SpectrumVariant(variant)
    if omega is None:
        omega = default_omega_grid(rates, config=grid_config)
    omega = np.asarray(omega, dtype=float)

    n_of_omega = np.asarray(spectrum(omega, rates, state, variant), dtype=float)
    integration = integrate_spectrum_checked(rates, state, variant, solver_config)

    meta = {
        "window": float(np.max(np.abs(omega))) if omega.size else 0.0,
        "points": int(omega.size),
        "n": integration.n,
        "n_error": integration.error,
        "backend": integration.backend
    }
    return SpectrumTable(
        omega=omega,
        n_of_omega=n_of_omega,
        p_out_of_omega=2.0 * rates.kappa * n_of_omega,
        variant=variant,
        meta=meta
    )
