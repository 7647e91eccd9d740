"""
Définition de la structure d'entrée pour les paramètres du dispositif.
Ce module contient le schéma de validation JSON de la section 'device' de la
configuration, les valeurs par défaut et la documentation des champs.
"""

from typing import Any, Dict

# Schéma de validation pour la section 'device'
DEVICE_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "lambda0": {"type": "number"},
        "n_r": {"type": "number"},
        "d": {"type": "number"},
        "n_c": {"type": "number"},
        "N0": {"type": "integer"},
        "gamma_perp": {"type": "number"},
        "gamma_par": {"type": "number"},
        "kappa": {"type": "number"},
        "f": {"type": "number"}
    },
    "required": ["lambda0", "n_r", "d", "n_c", "N0", "gamma_perp", "gamma_par", "kappa"],
    "additionalProperties": False
}

REQUIRED_FIELDS = ["lambda0", "n_r", "d", "n_c", "N0", "gamma_perp", "gamma_par", "kappa"]
OPTIONAL_FIELDS = ["f"]

# Jeu de paramètres de la LED non superradiante (2κ/γ⊥ = 0.05)
DEVICE_DEFAULTS: Dict[str, Any] = {
    "lambda0": 1.55e-6,
    "n_r": 3.3,
    "d": 1e-28,
    "n_c": 100.0,
    "N0": 100,
    "gamma_perp": 1e12,
    "gamma_par": 1e9,
    "kappa": 2.5e10,
    "f": 0.5
}

# Champs strictement positifs
POSITIVE_FIELDS = ["lambda0", "n_r", "d", "gamma_perp", "gamma_par", "kappa"]

# Bornes inférieures inclusives
LOWER_BOUNDS = {
    "n_c": 1.0,
    "N0": 1
}

# Documentation des champs pour référence (unités SI, fréquences angulaires)
FIELD_DESCRIPTIONS = {
    "lambda0": "Longueur d'onde dans le vide (m)",
    "n_r": "Indice de réfraction du milieu (sans dimension)",
    "d": "Moment dipolaire de la transition (C·m)",
    "n_c": "Volume de cavité normalisé en unités de V_min (≥ 1)",
    "N0": "Nombre d'émetteurs (entier ≥ 1)",
    "gamma_perp": "Taux de décroissance de la polarisation γ⊥ (rad/s)",
    "gamma_par": "Taux de décroissance du niveau haut γ∥ (rad/s)",
    "kappa": "Taux de décroissance du champ de cavité κ (rad/s)",
    "f": "Facteur de moyennage du couplage f (0 < f ≤ 1)"
}

# Unités des grandeurs dérivées, reprises dans le manifeste
DERIVED_UNITS = {
    "omega0": "rad/s",
    "V_min": "m^3",
    "V_c": "m^3",
    "Omega": "rad/s",
    "g_diff": "rad/s",
    "beta": "1",
    "N_th": "1",
    "adiabatic_parameter": "1",
    "omega_over_gamma": "1",
    "quality_factor": "1"
}
