"""
État du milieu (populations, dispersion des fluctuations, pompe) et
traitements des fluctuations de population pour le spectre.
"""

import math
from dataclasses import dataclass
from enum import Enum

from src.led.errors import ParameterValidationError


class SpectrumVariant(str, Enum):
    """Traitement des fluctuations de population (PF) dans le spectre du champ."""
    ZERO_ORDER = "ZeroOrder"
    SPONTANEOUS_ONLY = "SpontaneousOnly"
    PERTURBATIVE = "Perturbative"
    NON_PERTURBATIVE = "NonPerturbative"

    @classmethod
    def parse(cls, name: str) -> "SpectrumVariant":
        """Accepte 'NonPerturbative', 'non-perturbative' ou 'non_perturbative'."""
        key = name.replace("-", "").replace("_", "").lower()
        for variant in cls:
            if variant.value.lower() == key:
                return variant
        raise ValueError(f"Variante de spectre inconnue: '{name}'")


@dataclass(frozen=True)
class MediumState:
    N_e: float
    N_g: float
    N: float
    delta2_Ne: float
    P: float


def make_state(N_e: float, N0: int, delta2_Ne: float = 0.0, P: float = 0.0) -> MediumState:
    """
    Construit un MediumState en imposant N_g = N0 − N_e et N = N_e − N_g.

    Args:
        N_e: Population moyenne du niveau haut
        N0: Nombre d'émetteurs
        delta2_Ne: Dispersion des fluctuations de population
        P: Pompe normalisée

    Returns:
        État du milieu

    Raises:
        ParameterValidationError: Population hors de [0, N0] ou dispersion négative
    """
    if not (math.isfinite(N_e) and 0.0 <= N_e <= N0):
        raise ParameterValidationError("N_e", f"N_e = {N_e} hors de [0, {N0}]")
    if not (math.isfinite(delta2_Ne) and delta2_Ne >= 0.0):
        raise ParameterValidationError("delta2_Ne", f"Dispersion négative ou non finie: {delta2_Ne}")
    if not (math.isfinite(P) and P >= 0.0):
        raise ParameterValidationError("P", f"Pompe négative ou non finie: {P}")

    N_g = N0 - N_e
    return MediumState(N_e=N_e, N_g=N_g, N=N_e - N_g, delta2_Ne=delta2_Ne, P=P)
