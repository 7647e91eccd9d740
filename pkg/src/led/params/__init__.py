"""
Paramètres du dispositif, constantes physiques et constantes dérivées.
"""

from src.led.params.physical_constants import PHYSICAL_CONSTANTS, PhysicalConstants
from src.led.params.device_params import DerivedRates, DeviceParams
from src.led.params.validate_device_params import validate_device_params
from src.led.params.derive_rates import derive_rates
from src.led.params.build_device_params import device_params_from_dict, exchange_rates

__all__ = [
    'PHYSICAL_CONSTANTS',
    'PhysicalConstants',
    'DerivedRates',
    'DeviceParams',
    'validate_device_params',
    'derive_rates',
    'device_params_from_dict',
    'exchange_rates'
]
