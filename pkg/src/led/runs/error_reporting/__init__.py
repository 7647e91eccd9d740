"""
Rapport d'audit Excel des lignes signalées d'un run.
"""

from src.led.runs.error_reporting.generate_error_report import generate_error_report

__all__ = ['generate_error_report']
