"""
Exécution par lots: presets de figures, balayages de paramètres et sorties
lisibles par machine.
"""

from src.led.runs.presets import PRESETS, Preset, get_preset, list_presets
from src.led.runs.run_preset import run_preset
from src.led.runs.sweep import parse_grid, sweep

__all__ = [
    'PRESETS',
    'Preset',
    'get_preset',
    'list_presets',
    'run_preset',
    'parse_grid',
    'sweep'
]
