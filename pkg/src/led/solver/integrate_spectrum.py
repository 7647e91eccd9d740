"""
Intégration du spectre du champ: n = (2π)⁻¹ ∫ n(ω) dω.

Deux méthodes indépendantes:
- residue: somme exacte des résidus du demi-plan supérieur sur les
  dénominateurs quartiques S et D;
- adaptive: quadrature adaptive (scipy.integrate.quad) sur une fenêtre
  finie puis sur la queue [W, ∞).
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np
from scipy import integrate

from src.led.errors import QuadratureNoConvergence, StabilityViolation, ThresholdSingularity
from src.led.params.device_params import DerivedRates
from src.led.solver.solver_config import SolverConfig
from src.led.spectra.field_spectrum import (
    DENOMINATOR_D,
    denominator_coefficients,
    minimum_s_squared,
    spectrum,
    spectrum_terms,
    stability_margin
)
from src.led.spectra.medium_state import MediumState, SpectrumVariant
from src.led.spectra.response import response_coefficients
from src.led.spectra.spectrum_table import spectral_scale
from src.led.validation.quartic import QuarticFactorization, factor_quartic
from src.led.validation.residue_integral import residue_integral
from src.utils.logging_manager import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class IntegrationResult:
    """
    Attributes:
        n: Nombre moyen de photons
        error: Estimation de l'erreur absolue sur n
        backend: Méthode ayant fourni n
        deviation: Écart relatif entre les deux méthodes (backend both), sinon None
    """
    n: float
    error: float
    backend: str
    deviation: Optional[float] = None


def _vertex_omega(rates: DerivedRates, state: MediumState) -> float:
    """Position |ω| du minimum de |s(ω)|² (0 si le sommet est en x ≤ 0)."""
    A, B = response_coefficients(rates, state)
    vertex = A - 0.5 * B * B
    return math.sqrt(vertex) if vertex > 0.0 else 0.0


def _check_below_threshold(rates: DerivedRates, state: MediumState) -> None:
    if not minimum_s_squared(rates, state) > 0.0:
        raise ThresholdSingularity(_vertex_omega(rates, state))


def _factor_denominator(rates: DerivedRates, state: MediumState, denominator: str) -> QuarticFactorization:
    """Factorise S ou D; une racine réelle signale le seuil (S) ou la perte de stabilité (D)."""
    factorization = factor_quartic(denominator_coefficients(rates, state, denominator))
    if factorization.has_real_roots():
        if denominator == DENOMINATOR_D:
            raise StabilityViolation(state.N_e, stability_margin(rates, state))
        raise ThresholdSingularity(_vertex_omega(rates, state))
    return factorization


def integrate_residue(rates: DerivedRates, state: MediumState, variant: SpectrumVariant) -> IntegrationResult:
    """Intégration exacte par les résidus."""
    _check_below_threshold(rates, state)
    terms = spectrum_terms(rates, state, variant)

    factorizations: Dict[str, QuarticFactorization] = {}
    total = 0.0
    magnitude = 0.0
    for term in terms:
        if term.weight == 0.0:
            continue
        if term.denominator not in factorizations:
            factorizations[term.denominator] = _factor_denominator(rates, state, term.denominator)
        contribution = term.weight * residue_integral(
            term.numerator, factorizations[term.denominator], term.power
        )
        total += contribution
        magnitude += abs(contribution)

    if DENOMINATOR_D in factorizations:
        logger.debug(
            f"Racines de D: {np.array2string(factorizations[DENOMINATOR_D].roots, precision=4)}"
        )

    n = total / (2.0 * math.pi)
    # Précision limitée par les compensations entre termes
    error = 64.0 * np.finfo(float).eps * magnitude / (2.0 * math.pi)
    return IntegrationResult(n=n, error=error, backend="residue")


def integrate_adaptive(
    rates: DerivedRates,
    state: MediumState,
    variant: SpectrumVariant,
    config: SolverConfig
) -> IntegrationResult:
    """
    Quadrature adaptive en variable réduite u = ω/Λ, en exploitant la parité.

    Raises:
        QuadratureNoConvergence: Erreur estimée supérieure à quad_rel_tol
    """
    _check_below_threshold(rates, state)
    # Contrôle de stabilité et singularité une seule fois, avant les appels scalaires
    spectrum(0.0, rates, state, variant)

    scale = spectral_scale(rates)
    window = config.quad_window_factor
    peak = _vertex_omega(rates, state) / scale

    def integrand(u: float) -> float:
        return float(spectrum(scale * u, rates, state, variant)) * scale

    target = 0.1 * config.quad_rel_tol
    points = [peak] if 0.0 < peak < window else None
    core, core_error = integrate.quad(
        integrand, 0.0, window, points=points,
        epsabs=0.0, epsrel=target, limit=config.quad_limit, full_output=1
    )[:2]
    tail, tail_error = integrate.quad(
        integrand, window, np.inf,
        epsabs=0.0, epsrel=target, limit=config.quad_limit, full_output=1
    )[:2]

    value = 2.0 * (core + tail)
    error = 2.0 * (core_error + tail_error)
    if not math.isfinite(value) or error > config.quad_rel_tol * abs(value):
        raise QuadratureNoConvergence(
            f"Quadrature adaptive non convergée: erreur {error:.3g} pour ∫ = {value:.6g} "
            f"(limite {config.quad_limit} sous-intervalles)"
        )

    return IntegrationResult(
        n=value / (2.0 * math.pi),
        error=error / (2.0 * math.pi),
        backend="adaptive"
    )


def integrate_spectrum_checked(
    rates: DerivedRates,
    state: MediumState,
    variant: SpectrumVariant,
    config: Optional[SolverConfig] = None
) -> IntegrationResult:
    """
    Intègre le spectre avec la méthode configurée.

    Avec le backend 'both', n provient des résidus et l'écart relatif à la
    quadrature adaptive est rapporté (avertissement au-delà de cross_check_tol).

    Args:
        rates: Constantes dérivées
        state: État du milieu
        variant: Traitement des fluctuations de population
        config: Réglages du solveur

    Returns:
        Résultat d'intégration

    Raises:
        StabilityViolation: NonPerturbative avec marge ≤ 0
        ThresholdSingularity: |s(ω)|² s'annule
        QuadratureNoConvergence: Quadrature adaptive non convergée
    """
    config = config or SolverConfig()
    variant = SpectrumVariant(variant)

    if config.quad_backend == "residue":
        return integrate_residue(rates, state, variant)
    if config.quad_backend == "adaptive":
        return integrate_adaptive(rates, state, variant, config)

    exact = integrate_residue(rates, state, variant)
    adaptive = integrate_adaptive(rates, state, variant, config)
    reference = max(abs(exact.n), abs(adaptive.n))
    deviation = abs(exact.n - adaptive.n) / reference if reference > 0.0 else 0.0
    if deviation > config.cross_check_tol:
        logger.warning(
            f"Écart résidus/quadrature {deviation:.3g} > {config.cross_check_tol:g} "
            f"(N_e = {state.N_e:.12g}, {variant.value})"
        )
    return IntegrationResult(
        n=exact.n,
        error=max(exact.error, abs(exact.n - adaptive.n)),
        backend="both",
        deviation=deviation
    )


def integrate_spectrum(
    rates: DerivedRates,
    state: MediumState,
    variant: SpectrumVariant,
    config: Optional[SolverConfig] = None
) -> float:
    """Nombre moyen de photons n = (2π)⁻¹ ∫ n(ω) dω (voir integrate_spectrum_checked)."""
    return integrate_spectrum_checked(rates, state, variant, config).n
