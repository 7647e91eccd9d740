"""
Hiérarchie des exceptions du simulateur.
Chaque exception porte les grandeurs nécessaires pour diagnostiquer le point
de fonctionnement fautif (champ, population, marge).
"""

from typing import Any, Dict, List, Optional


class LedSimulationError(Exception):
    """Exception de base du simulateur."""


class ConfigError(LedSimulationError):
    """Fichier de configuration ou surcharge --set invalide."""

    def __init__(self, message: str, issues: Optional[List[Dict[str, Any]]] = None):
        super().__init__(message)
        self.issues = issues or []


class ParameterValidationError(LedSimulationError):
    """Paramètre physique non admissible; `field` nomme le champ fautif."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class ThresholdSingularity(LedSimulationError):
    """|s(ω)|² = 0: seuil semi-classique atteint."""

    def __init__(self, omega: float):
        super().__init__(f"|s(ω)|² nul à ω = {omega:.6g} rad/s (seuil)")
        self.omega = omega


class StabilityViolation(LedSimulationError):
    """Le dénominateur de n(ω) s'annule ou change de signe (seuil effectif franchi)."""

    def __init__(self, N_e: float, margin: float):
        super().__init__(
            f"Marge de stabilité non positive ({margin:.6g}) pour N_e = {N_e:.12g}"
        )
        self.N_e = N_e
        self.margin = margin


class QuadratureNoConvergence(LedSimulationError):
    """L'intégration adaptative n'atteint pas la tolérance demandée."""


class NoRoot(LedSimulationError):
    """Pas de changement de signe de la loi de conservation de l'énergie."""


class FixedPointDivergence(LedSimulationError):
    """La boucle interne n ↔ δ²N_e ne converge pas."""

    def __init__(self, N_e: float, iterations: int):
        super().__init__(
            f"Point fixe n/δ²N_e non convergé après {iterations} itérations (N_e = {N_e:.12g})"
        )
        self.N_e = N_e
        self.iterations = iterations


class InternalSolverError(LedSimulationError):
    """Invariant interne violé (monotonie de F, bilan d'énergie)."""


class PFValidityError(LedSimulationError):
    """Condition de validité (δ²N_e)_f^{1/2} ≪ N_e violée avec la politique 'abort'."""


class WindowTooNarrow(LedSimulationError):
    """Le maximum principal du spectre est au bord de la grille en ω."""


class SweepError(LedSimulationError):
    """Balayage de paramètres mal défini (grille vide, clé inconnue)."""
