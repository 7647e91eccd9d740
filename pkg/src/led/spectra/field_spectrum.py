"""
Spectre du champ de cavité n(ω) pour les quatre traitements des fluctuations
de population, marge de stabilité et spectre de puissance de Langevin.

Notations: S = |s(ω)|², K = 4Ω⁴f²δ²N_e, D = S − K.
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np

from src.led.errors import StabilityViolation
from src.led.params.device_params import DerivedRates
from src.led.spectra.medium_state import MediumState, SpectrumVariant
from src.led.spectra.response import c_of_omega, response_coefficients, s_squared

ArrayLike = Union[float, np.ndarray]

DENOMINATOR_S = "S"
DENOMINATOR_D = "D"


@dataclass(frozen=True)
class RationalTerm:
    """
    Terme weight·p(x)/Q(x)^power avec x = ω².

    Attributes:
        weight: Facteur multiplicatif
        numerator: Coefficients de p en x, par puissances croissantes
        denominator: 'S' ou 'D'
        power: 1 ou 2
    """
    weight: float
    numerator: Tuple[float, ...]
    denominator: str
    power: int


def pf_coupling(rates: DerivedRates, delta2_Ne: float) -> float:
    """K = 4Ω⁴f²δ²N_e."""
    return 4.0 * rates.Omega ** 4 * rates.f ** 2 * delta2_Ne


def spontaneous_weight(rates: DerivedRates, state: MediumState) -> float:
    """fΩ²γ⊥N_e, numérateur de l'émission spontanée."""
    return rates.f * rates.Omega ** 2 * rates.gamma_perp * state.N_e


def denominator_coefficients(rates: DerivedRates, state: MediumState, which: str) -> Tuple[float, float, float]:
    """
    Coefficients de S(x) ou D(x) = x² + (B² − 2A)x + A² − K, puissances croissantes.
    """
    A, B = response_coefficients(rates, state)
    constant = A * A
    if which == DENOMINATOR_D:
        constant -= pf_coupling(rates, state.delta2_Ne)
    return constant, B * B - 2.0 * A, 1.0


def minimum_s_squared(rates: DerivedRates, state: MediumState) -> float:
    """Minimum de |s(ω)|² sur ω réel (sommet de la parabole en x, x ≥ 0)."""
    A, B = response_coefficients(rates, state)
    vertex = A - 0.5 * B * B
    if vertex > 0.0:
        return 0.25 * B * B * (4.0 * A - B * B)
    return A * A


def stability_margin(rates: DerivedRates, state: MediumState) -> float:
    """
    Marge min_ω |s(ω)|² − 4Ω⁴f²δ²N_e.

    Une marge ≤ 0 signifie que le dénominateur de n(ω) s'annule: l'appelant
    la traite comme une StabilityViolation.
    """
    return minimum_s_squared(rates, state) - pf_coupling(rates, state.delta2_Ne)


def relative_stability_margin(rates: DerivedRates, state: MediumState) -> float:
    """Marge rapportée à min |s|² (1 sans fluctuations, 0 au seuil effectif)."""
    s_min = minimum_s_squared(rates, state)
    if s_min <= 0.0:
        return 0.0
    return stability_margin(rates, state) / s_min


def _require_stable(rates: DerivedRates, state: MediumState) -> None:
    margin = stability_margin(rates, state)
    if not margin > 0.0:
        raise StabilityViolation(state.N_e, margin)


def spectrum(omega: ArrayLike, rates: DerivedRates, state: MediumState, variant: SpectrumVariant) -> ArrayLike:
    """
    Spectre du champ de cavité n(ω) (sans dimension, par rad/s).

    Args:
        omega: Écart à ω0 (rad/s), scalaire ou tableau
        rates: Constantes dérivées
        state: État du milieu
        variant: Traitement des fluctuations de population

    Returns:
        n(ω), de même forme que omega

    Raises:
        StabilityViolation: NonPerturbative avec marge de stabilité ≤ 0
        ThresholdSingularity: |s(ω)|² = 0 en un point demandé
    """
    variant = SpectrumVariant(variant)
    if variant is SpectrumVariant.NON_PERTURBATIVE:
        _require_stable(rates, state)

    c = c_of_omega(omega, rates, state)
    S = s_squared(omega, rates, state)
    spont = spontaneous_weight(rates, state)
    K = pf_coupling(rates, state.delta2_Ne)
    # 2Ω²f·c·δ²N_e·fΩ² = (K/2)·c
    stimulated = 0.5 * K * c

    if variant is SpectrumVariant.ZERO_ORDER:
        value = spont / S
    elif variant is SpectrumVariant.SPONTANEOUS_ONLY:
        value = (spont + stimulated) / S
    elif variant is SpectrumVariant.PERTURBATIVE:
        value = (spont + stimulated) / S + spont * K / (S * S)
    else:
        value = (spont + stimulated) / (S - K)
    return value[()] if np.ndim(value) == 0 else value


def spectrum_derivative(omega: ArrayLike, rates: DerivedRates, state: MediumState) -> ArrayLike:
    """∂n/∂δ²N_e en δ²N_e = 0, coefficient du premier ordre de la variante Perturbative."""
    c = c_of_omega(omega, rates, state)
    S = s_squared(omega, rates, state)
    k1 = pf_coupling(rates, 1.0)
    value = 0.5 * k1 * c / S + spontaneous_weight(rates, state) * k1 / (S * S)
    return value[()] if np.ndim(value) == 0 else value


def spectrum_terms(rates: DerivedRates, state: MediumState, variant: SpectrumVariant) -> List[RationalTerm]:
    """
    Décomposition de n(ω) en termes rationnels pairs sur S ou D.

    NonPerturbative: fΩ²γ⊥N_e/D + ½(2κx + γ⊥A)/D − ½(2κx + γ⊥A)/S
    SpontaneousOnly: fΩ²γ⊥N_e/S + (K/2)(2κx + γ⊥A)/S²
    Perturbative:    SpontaneousOnly + fΩ²γ⊥N_e·K/S²
    ZeroOrder:       fΩ²γ⊥N_e/S
    """
    variant = SpectrumVariant(variant)
    A, _ = response_coefficients(rates, state)
    spont = spontaneous_weight(rates, state)
    K = pf_coupling(rates, state.delta2_Ne)
    kernel = (rates.gamma_perp * A, 2.0 * rates.kappa)

    if variant is SpectrumVariant.NON_PERTURBATIVE:
        _require_stable(rates, state)
        if K == 0.0:
            return [RationalTerm(spont, (1.0,), DENOMINATOR_S, 1)]
        return [
            RationalTerm(spont, (1.0,), DENOMINATOR_D, 1),
            RationalTerm(0.5, kernel, DENOMINATOR_D, 1),
            RationalTerm(-0.5, kernel, DENOMINATOR_S, 1)
        ]

    terms = [RationalTerm(spont, (1.0,), DENOMINATOR_S, 1)]
    if variant is SpectrumVariant.ZERO_ORDER:
        return terms
    terms.append(RationalTerm(0.5 * K, kernel, DENOMINATOR_S, 2))
    if variant is SpectrumVariant.PERTURBATIVE:
        terms.append(RationalTerm(spont * K, (1.0,), DENOMINATOR_S, 2))
    return terms


def langevin_power_spectrum(
    omega: ArrayLike,
    rates: DerivedRates,
    state: MediumState,
    pf_spectrum_dispersion: float
) -> ArrayLike:
    """
    Spectre de puissance de la force de Langevin de la polarisation,
    2D(ω) = fγ⊥N_e + 2f²Ω²·c(ω)·δ²N_e (rad/s). Diagnostic uniquement.

    Raises:
        ThresholdSingularity: |s(ω)|² = 0 en un point demandé
    """
    c = c_of_omega(omega, rates, state)
    value = rates.f * rates.gamma_perp * state.N_e \
        + 2.0 * rates.f ** 2 * rates.Omega ** 2 * c * pf_spectrum_dispersion
    return value[()] if np.ndim(value) == 0 else value
