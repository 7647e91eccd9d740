"""
Spectres du champ de cavité: réponse s(ω), noyau c(ω), n(ω) pour les quatre
traitements des fluctuations de population.
"""

from src.led.spectra.medium_state import MediumState, SpectrumVariant, make_state
from src.led.spectra.response import c_of_omega, s_of_omega, s_squared
from src.led.spectra.field_spectrum import (
    RationalTerm,
    langevin_power_spectrum,
    relative_stability_margin,
    spectrum,
    spectrum_derivative,
    spectrum_terms,
    stability_margin
)
from src.led.spectra.spectrum_table import SpectrumGridConfig, SpectrumTable, default_omega_grid

__all__ = [
    'MediumState',
    'SpectrumVariant',
    'make_state',
    'c_of_omega',
    's_of_omega',
    's_squared',
    'RationalTerm',
    'langevin_power_spectrum',
    'relative_stability_margin',
    'spectrum',
    'spectrum_derivative',
    'spectrum_terms',
    'stability_margin',
    'SpectrumGridConfig',
    'SpectrumTable',
    'default_omega_grid'
]
