"""
Constantes physiques (valeurs CODATA fournies par scipy.constants).
Elles ne sont jamais configurables.
"""

from dataclasses import dataclass

from scipy import constants


@dataclass(frozen=True)
class PhysicalConstants:
    c_light: float = constants.c
    hbar: float = constants.hbar
    eps0: float = constants.epsilon_0


PHYSICAL_CONSTANTS = PhysicalConstants()
