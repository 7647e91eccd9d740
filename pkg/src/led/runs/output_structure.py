"""
Définition de la structure de sortie d'un run.
Ce module décrit les colonnes des tables CSV, leurs unités, les statuts de
ligne et le schéma du manifeste JSON.
"""

from typing import Any, Dict, List

# Colonnes des tables, dans l'ordre d'écriture
TABLE_COLUMNS: List[str] = [
    "P_or_omega",
    "value",
    "N_e",
    "n",
    "delta2_Ne",
    "stability_margin",
    "narrowness_ratio",
    "residual",
    "status"
]

NUMERIC_COLUMNS: List[str] = TABLE_COLUMNS[:-1]

# Unités des colonnes par type de table
COLUMN_UNITS: Dict[str, Dict[str, str]] = {
    "pump": {
        "P_or_omega": "P (pompe normalisée, sans dimension)",
        "value": "p_out (photons/s)"
    },
    "enhancement": {
        "P_or_omega": "P (pompe normalisée, sans dimension)",
        "value": "R (sans dimension)"
    },
    "spectrum": {
        "P_or_omega": "ω − ω0 (rad/s)",
        "value": "p_out(ω) (photons/s par rad/s)"
    },
    "common": {
        "N_e": "population du niveau haut (sans dimension)",
        "n": "nombre moyen de photons (sans dimension)",
        "delta2_Ne": "dispersion des fluctuations de population (sans dimension)",
        "stability_margin": "marge de stabilité / min|s|² (sans dimension)",
        "narrowness_ratio": "Γ_N/min(κ, γ⊥/2) (sans dimension)",
        "residual": "|2κn − γ∥(P N_g − N_e)|/(γ∥ N0) (sans dimension)",
        "status": "ok | warning:<types> | error:<exception>"
    }
}

STATUS_OK = "ok"
STATUS_WARNING_PREFIX = "warning:"
STATUS_ERROR_PREFIX = "error:"

MANIFEST_FILE = "manifest.json"
ERROR_REPORT_FILE = "error_report.xlsx"

# Schéma de validation du manifeste
MANIFEST_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "preset": {"type": "string"},
        "description": {"type": "string"},
        "bundle": {"type": ["string", "null"]},
        "kind": {"type": "string"},
        "code_version": {"type": "string"},
        "pf_model": {"type": "string"},
        "variants": {"type": "array", "items": {"type": "string"}},
        "config": {"type": "object"},
        "pump_grid": {"type": ["array", "null"], "items": {"type": "number"}},
        "curves": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string"},
                    "device": {"type": "object"},
                    "derived": {"type": "object"}
                },
                "required": ["name", "device", "derived"]
            }
        },
        "tables": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "file": {"type": "string"},
                    "curve": {"type": "string"},
                    "quantity": {"enum": ["pump", "enhancement", "spectrum"]},
                    "variant": {"type": ["string", "null"]},
                    "rows": {"type": "integer", "minimum": 0},
                    "flagged_rows": {"type": "integer", "minimum": 0},
                    "max_quad_deviation": {"type": ["number", "null"], "minimum": 0}
                },
                "required": ["file", "curve", "quantity", "variant", "rows", "flagged_rows"]
            }
        },
        "peaks": {"type": "object"},
        "columns": {"type": "object"}
    },
    "required": ["preset", "kind", "code_version", "pf_model", "variants", "config", "curves", "tables", "columns"],
    "additionalProperties": False
}
