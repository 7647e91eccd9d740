"""
Dispersion et largeur spectrale des fluctuations de population.
"""

from src.led.pf.pf_model import PFModel, PFTag
from src.led.pf.pf_bandwidth import pf_bandwidth
from src.led.pf.pf_dispersion import pf_dispersion
from src.led.pf.narrowness_check import field_dispersion_check, narrowness_check

__all__ = [
    'PFModel',
    'PFTag',
    'pf_bandwidth',
    'pf_dispersion',
    'field_dispersion_check',
    'narrowness_check'
]
