"""
Simulateur de LED superradiante monomode (équations de Maxwell-Bloch-Langevin).
"""

__version__ = "1.0.0"
