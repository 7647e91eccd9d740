"""
Simulateur de LED superradiante monomode (modèle de Maxwell-Bloch-Langevin
stationnaire, fluctuations de population incluses).
"""
