"""
Intégrales sur ℝ de fractions rationnelles paires p(ω²)/D(ω)^k par la
méthode des résidus (pôles du demi-plan supérieur), avec repli sur la
quadrature adaptive si les racines de D sont quasi dégénérées.
"""

import math
from typing import Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from scipy import integrate

from src.led.errors import QuadratureNoConvergence
from src.led.validation.quartic import QuarticFactorization
from src.utils.logging_manager import get_logger

logger = get_logger(__name__)

# Séparation relative minimale entre racines réduites avant repli
DEGENERACY_TOLERANCE = 1e-6


def _scaled_numerator(numerator: Sequence[float], scale: float) -> Polynomial:
    """p(Λ²u²) comme polynôme en u."""
    coefficients = np.zeros(2 * len(numerator) - 1)
    lam2 = scale * scale
    for k, value in enumerate(numerator):
        coefficients[2 * k] = value * lam2 ** k
    return Polynomial(coefficients)


def _residue_sum(P: Polynomial, d: Polynomial, roots: np.ndarray, power: int) -> complex:
    d1 = d.deriv()
    total = 0j
    if power == 1:
        for r in roots:
            total += P(r) / d1(r)
    else:
        P1 = P.deriv()
        d2 = d1.deriv()
        for r in roots:
            dr = d1(r)
            total += (P1(r) * dr - P(r) * d2(r)) / dr ** 3
    return total


def _adaptive_fallback(P: Polynomial, d: Polynomial, power: int) -> float:
    def integrand(u: float) -> float:
        return P(u) / d(u) ** power

    value, error = integrate.quad(integrand, 0.0, np.inf, epsabs=0.0, epsrel=1e-12, limit=400)
    if not math.isfinite(value) or error > 1e-8 * abs(value):
        raise QuadratureNoConvergence(
            f"Repli adaptatif non convergé (erreur estimée {error:.3g} pour {value:.6g})"
        )
    return 2.0 * value


def residue_integral(
    numerator: Sequence[float],
    factorization: QuarticFactorization,
    power: int = 1
) -> float:
    """
    Calcule ∫_{-∞}^{+∞} p(ω²)/D(ω)^power dω.

    Args:
        numerator: Coefficients de p en x = ω², puissances croissantes
        factorization: Factorisation de D
        power: Puissance du dénominateur (1 ou 2)

    Returns:
        Valeur de l'intégrale

    Raises:
        ValueError: Intégrale divergente (degré du numérateur trop élevé ou
            racine réelle de D)
    """
    if power not in (1, 2):
        raise ValueError(f"Puissance du dénominateur non prise en charge: {power}")
    if 2 * (len(numerator) - 1) > 4 * power - 2:
        raise ValueError("Degré du numérateur trop élevé: intégrale divergente")
    if factorization.has_real_roots():
        raise ValueError("D(ω) a une racine réelle: intégrale divergente")

    scale = factorization.scale
    P = _scaled_numerator(numerator, scale)
    d = factorization.scaled_polynomial
    # dω = Λ du et D(Λu) = c2·Λ⁴·d(u)
    prefactor = scale / (factorization.leading * scale ** 4) ** power

    if factorization.min_relative_separation() < DEGENERACY_TOLERANCE:
        logger.warning(
            "Racines de D quasi dégénérées "
            f"(séparation {factorization.min_relative_separation():.3g}): repli sur la quadrature adaptive"
        )
        return prefactor * _adaptive_fallback(P, d, power)

    upper = factorization.upper_half_plane_roots()
    total = 2j * math.pi * _residue_sum(P, d, upper, power)
    return prefactor * float(total.real)


def closed_form_even_quartic_integrals(p: float, q: float) -> Tuple[float, float]:
    """
    Intégrales de référence pour ω⁴ + pω² + q (q > 0, p + 2√q > 0):

        ∫ dω/(ω⁴ + pω² + q)  = π/(√q·√(p + 2√q))
        ∫ ω²dω/(ω⁴ + pω² + q) = π/√(p + 2√q)

    Returns:
        Tuple (intégrale sans ω², intégrale avec ω²)
    """
    if q <= 0.0:
        raise ValueError("q doit être strictement positif")
    root_q = math.sqrt(q)
    if p + 2.0 * root_q <= 0.0:
        raise ValueError("p + 2√q doit être strictement positif")
    width = math.sqrt(p + 2.0 * root_q)
    return math.pi / (root_q * width), math.pi / width
