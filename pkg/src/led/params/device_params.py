"""
Types valeur des paramètres du dispositif et des constantes dérivées.
Toutes les fréquences et tous les taux sont angulaires (rad/s).
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict


@dataclass(frozen=True)
class DeviceParams:
    """
    Paramètres physiques bruts d'une LED monomode.

    Attributes:
        lambda0: Longueur d'onde dans le vide (m)
        n_r: Indice de réfraction
        d: Moment dipolaire de la transition (C·m)
        n_c: Volume de cavité normalisé (≥ 1)
        N0: Nombre d'émetteurs
        gamma_perp: Taux de décroissance de la polarisation (rad/s)
        gamma_par: Taux de décroissance du niveau haut (rad/s)
        kappa: Taux de décroissance du champ (rad/s)
        f: Facteur de moyennage du couplage
    """
    lambda0: float
    n_r: float
    d: float
    n_c: float
    N0: int
    gamma_perp: float
    gamma_par: float
    kappa: float
    f: float = 0.5

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class DerivedRates:
    """
    Constantes dérivées d'un jeu de DeviceParams.

    Les taux bruts (kappa, gamma_perp, gamma_par, f, N0) sont recopiés pour
    que les fonctions de spectre ne dépendent que de cet objet.
    """
    omega0: float
    V_min: float
    V_c: float
    Omega: float
    g_diff: float
    beta: float
    N_th: float
    kappa: float
    gamma_perp: float
    gamma_par: float
    f: float
    N0: int

    @property
    def adiabatic_parameter(self) -> float:
        """Paramètre adiabatique 2κ/γ⊥ (> 1 pour une LED superradiante)."""
        return 2.0 * self.kappa / self.gamma_perp

    @property
    def omega_over_gamma(self) -> float:
        return self.Omega / self.gamma_perp

    @property
    def quality_factor(self) -> float:
        """Facteur de qualité de la cavité Q = ω0/(2κ)."""
        return self.omega0 / (2.0 * self.kappa)

    def to_dict(self) -> Dict[str, Any]:
        values = asdict(self)
        values["adiabatic_parameter"] = self.adiabatic_parameter
        values["omega_over_gamma"] = self.omega_over_gamma
        values["quality_factor"] = self.quality_factor
        return values
