"""
Définition de la structure d'entrée de la configuration d'un run.
Ce module contient le schéma de validation JSON complet (sections device,
pump, solver, pf, spectrum, run) et la configuration par défaut.
"""

from typing import Any, Dict

from src.led.params.input_structure import DEVICE_DEFAULTS, DEVICE_SCHEMA

POSITIVE_NUMBER = {"type": "number", "exclusiveMinimum": 0}
POSITIVE_INTEGER = {"type": "integer", "minimum": 1}

# Schéma de validation de la configuration
CONFIG_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "device": DEVICE_SCHEMA,
        "pump": {
            "type": "object",
            "properties": {
                "P_min": POSITIVE_NUMBER,
                "P_max": POSITIVE_NUMBER,
                "points": POSITIVE_INTEGER,
                "spacing": {"enum": ["log", "linear"]},
                "grid": {"type": ["array", "null"], "items": {"type": "number", "minimum": 0}}
            },
            "required": ["P_min", "P_max", "points", "spacing"],
            "additionalProperties": False
        },
        "solver": {
            "type": "object",
            "properties": {
                "ne_tol": POSITIVE_NUMBER,
                "quad_rel_tol": POSITIVE_NUMBER,
                "max_outer_iters": POSITIVE_INTEGER,
                "damping": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
                "quad_backend": {"enum": ["residue", "adaptive", "both"]},
                "quad_window_factor": POSITIVE_NUMBER,
                "quad_limit": POSITIVE_INTEGER,
                "cross_check_tol": POSITIVE_NUMBER
            },
            "additionalProperties": False
        },
        "pf": {
            "type": "object",
            "properties": {
                "model": {"enum": ["binomial", "langevin-rate", "none"]},
                "narrowness_threshold": POSITIVE_NUMBER,
                "field_dispersion_limit": POSITIVE_NUMBER,
                "field_dispersion_policy": {"enum": ["warn", "abort"]}
            },
            "additionalProperties": False
        },
        "spectrum": {
            "type": "object",
            "properties": {
                "P": {"type": "number", "minimum": 0},
                "window_factor": POSITIVE_NUMBER,
                "n_linear": {"type": "integer", "minimum": 3},
                "n_log": {"type": "integer", "minimum": 0},
                "log_min_fraction": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1}
            },
            "additionalProperties": False
        },
        "run": {
            "type": "object",
            "properties": {
                "out": {"type": "string", "minLength": 1},
                "workers": POSITIVE_INTEGER,
                "archive": {"type": "boolean"},
                "log_dir": {"type": "string", "minLength": 1}
            },
            "additionalProperties": False
        }
    },
    "required": ["device", "pump", "solver", "pf", "spectrum", "run"],
    "additionalProperties": False
}

# Configuration par défaut (identique à config/default.json)
DEFAULT_CONFIG: Dict[str, Any] = {
    "device": dict(DEVICE_DEFAULTS),
    "pump": {
        "P_min": 0.01,
        "P_max": 2.0,
        "points": 60,
        "spacing": "log",
        "grid": None
    },
    "solver": {
        "ne_tol": 1e-10,
        "quad_rel_tol": 1e-9,
        "max_outer_iters": 200,
        "damping": 0.5,
        "quad_backend": "residue",
        "quad_window_factor": 20.0,
        "quad_limit": 200,
        "cross_check_tol": 1e-8
    },
    "pf": {
        "model": "binomial",
        "narrowness_threshold": 0.1,
        "field_dispersion_limit": 0.1,
        "field_dispersion_policy": "warn"
    },
    "spectrum": {
        "P": 1.0,
        "window_factor": 20.0,
        "n_linear": 1601,
        "n_log": 400,
        "log_min_fraction": 1e-4
    },
    "run": {
        "out": "outputs",
        "workers": 1,
        "archive": True,
        "log_dir": "logs"
    }
}
