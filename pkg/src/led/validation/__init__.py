"""
Outils de vérification numérique: factorisation des dénominateurs quartiques
et intégrales par résidus. La batterie de propriétés se trouve dans
src.led.validation.property_suite.
"""

from src.led.validation.quartic import QuarticFactorization, factor_quartic
from src.led.validation.residue_integral import (
    DEGENERACY_TOLERANCE,
    closed_form_even_quartic_integrals,
    residue_integral
)

__all__ = [
    "DEGENERACY_TOLERANCE",
    "QuarticFactorization",
    "closed_form_even_quartic_integrals",
    "factor_quartic",
    "residue_integral"
]
