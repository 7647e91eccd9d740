"""
Intégration des spectres, point de fonctionnement auto-cohérent, facteur
d'augmentation et analyse du dédoublement de Rabi collectif.
"""

from src.led.solver.solver_config import SolverConfig
from src.led.solver.integrate_spectrum import IntegrationResult, integrate_spectrum, integrate_spectrum_checked
from src.led.solver.operating_point import Diagnostics, OperatingPoint, solve_operating_point, solve_pump_curve
from src.led.solver.enhancement_factor import enhancement_factor, enhancement_ratio, spontaneous_emission_share
from src.led.solver.find_crs_peaks import PeakReport, find_crs_peaks
from src.led.solver.build_spectrum_table import build_spectrum_table

__all__ = [
    'SolverConfig',
    'IntegrationResult',
    'integrate_spectrum',
    'integrate_spectrum_checked',
    'Diagnostics',
    'OperatingPoint',
    'solve_operating_point',
    'solve_pump_curve',
    'enhancement_factor',
    'enhancement_ratio',
    'spontaneous_emission_share',
    'PeakReport',
    'find_crs_peaks',
    'build_spectrum_table'
]
