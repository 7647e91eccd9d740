"""
Réponse complexe du système couplé s(ω) et noyau c(ω).

Notations internes: x = ω², A = (κγ⊥/2)(1 − N/N_th), B = κ + γ⊥/2, de sorte que
|s(ω)|² = (A − x)² + B²x.
"""

from typing import Tuple, Union

import numpy as np

from src.led.errors import ThresholdSingularity
from src.led.params.device_params import DerivedRates
from src.led.spectra.medium_state import MediumState

ArrayLike = Union[float, np.ndarray]


def response_coefficients(rates: DerivedRates, state: MediumState) -> Tuple[float, float]:
    """Retourne (A, B)."""
    A = 0.5 * rates.kappa * rates.gamma_perp * (1.0 - state.N / rates.N_th)
    B = rates.kappa + 0.5 * rates.gamma_perp
    return A, B


def s_of_omega(omega: ArrayLike, rates: DerivedRates, state: MediumState) -> Union[complex, np.ndarray]:
    """
    s(ω) = (κ − iω)(γ⊥/2 − iω) − κγ⊥N/(2N_th).

    Args:
        omega: Écart à ω0 (rad/s), scalaire ou tableau
        rates: Constantes dérivées
        state: État du milieu

    Returns:
        Valeur complexe (rad²/s²)
    """
    omega = np.asarray(omega, dtype=float)
    value = (rates.kappa - 1j * omega) * (0.5 * rates.gamma_perp - 1j * omega) \
        - rates.kappa * rates.gamma_perp * state.N / (2.0 * rates.N_th)
    return value[()] if value.ndim == 0 else value


def s_squared(omega: ArrayLike, rates: DerivedRates, state: MediumState) -> ArrayLike:
    """|s(ω)|², fonction paire de ω évaluée en x = ω²."""
    A, B = response_coefficients(rates, state)
    x = np.square(np.asarray(omega, dtype=float))
    value = (A - x) ** 2 + B ** 2 * x
    return value[()] if np.ndim(value) == 0 else value


def _check_threshold(omega: ArrayLike, S: ArrayLike) -> None:
    zero = np.asarray(S) <= 0.0
    if np.any(zero):
        where = np.asarray(omega, dtype=float)[zero] if np.ndim(omega) else omega
        raise ThresholdSingularity(float(np.ravel(where)[0]))


def c_of_omega(omega: ArrayLike, rates: DerivedRates, state: MediumState) -> ArrayLike:
    """
    c(ω) = [2κω² + (κγ⊥²/2)(1 − N/N_th)] / |s(ω)|².

    Raises:
        ThresholdSingularity: Si |s(ω)|² = 0 en un point demandé
    """
    A, _ = response_coefficients(rates, state)
    x = np.square(np.asarray(omega, dtype=float))
    S = s_squared(omega, rates, state)
    _check_threshold(omega, S)
    value = (2.0 * rates.kappa * x + rates.gamma_perp * A) / S
    return value[()] if np.ndim(value) == 0 else value
