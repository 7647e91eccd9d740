"""
Balayage cartésien générique: une table p_out(P) par combinaison des
paramètres du dispositif balayés.
"""

import itertools
import os
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from src import __version__
from src.led.errors import SweepError
from src.led.params.build_device_params import device_params_from_dict
from src.led.params.derive_rates import derive_rates
from src.led.params.input_structure import OPTIONAL_FIELDS, REQUIRED_FIELDS
from src.led.pf.pf_model import PFModel
from src.led.runs.output_structure import COLUMN_UNITS
from src.led.runs.run_preset import manifest_config, publish_outputs, run_pump_curves
from src.led.runs.run_settings import pump_grid_from, solver_config_from
from src.led.spectra.medium_state import SpectrumVariant
from src.utils.logging_manager import get_logger

logger = get_logger(__name__)

SWEEP_NAME = "sweep"
DEVICE_KEYS = REQUIRED_FIELDS + OPTIONAL_FIELDS


def parse_grid(specs: Sequence[str]) -> Dict[str, List[float]]:
    """
    Lit des spécifications 'clé=v1,v2,...' (clé: P ou champ du dispositif).

    Raises:
        SweepError: Spécification mal formée ou valeur non numérique
    """
    grid: Dict[str, List[float]] = {}
    for spec in specs:
        if "=" not in spec:
            raise SweepError(f"Spécification de grille invalide (attendu clé=v1,v2,...): '{spec}'")
        key, raw = spec.split("=", 1)
        key = key.strip()
        try:
            values = [float(item) for item in raw.split(",") if item.strip()]
        except ValueError:
            raise SweepError(f"Valeurs non numériques pour '{key}': '{raw}'")
        grid[key] = values
    return grid


def combo_name(combo: Tuple[Tuple[str, float], ...]) -> str:
    if not combo:
        return "base"
    return "_".join(f"{key}{value:g}" for key, value in combo)


def sweep(
    grid: Dict[str, Sequence[float]],
    variant: SpectrumVariant,
    pf_model: PFModel,
    config: Dict[str, Any],
    output_dir: Optional[str] = None
) -> Tuple[List[str], List[Dict[str, Any]], int]:
    """
    Exécute un balayage cartésien.

    La clé P donne la grille de pompe (sinon la grille de la configuration);
    chaque combinaison des autres clés produit une table.

    Args:
        grid: Valeurs par clé (P ou champ de la section 'device')
        variant: Traitement des fluctuations
        pf_model: Modèle de dispersion
        config: Configuration validée
        output_dir: Répertoire racine des sorties (sinon run.out)

    Returns:
        Tuple contenant:
        - La liste des fichiers écrits
        - La liste des erreurs de résolution
        - Le nombre total de lignes

    Raises:
        SweepError: Grille vide ou clé inconnue
    """
    if not grid or any(len(values) == 0 for values in grid.values()):
        raise SweepError("empty sweep")
    for key in grid:
        if key != "P" and key not in DEVICE_KEYS:
            raise SweepError(f"Clé de balayage inconnue: '{key}' (attendu P ou {', '.join(DEVICE_KEYS)})")

    variant = SpectrumVariant(variant)
    P_grid = np.asarray(grid["P"], dtype=float) if "P" in grid else pump_grid_from(config)
    device_keys = [key for key in grid if key != "P"]
    combos = [
        tuple(zip(device_keys, values))
        for values in itertools.product(*(grid[key] for key in device_keys))
    ]

    solver = solver_config_from(config)
    workers = int(config["run"].get("workers", 1))
    out_root = output_dir or config["run"]["out"]
    sweep_dir = os.path.join(out_root, SWEEP_NAME)

    logger.info(f"Étape 1: Balayage de {len(combos)} combinaisons × {len(P_grid)} pompes ({variant.value})")
    tables: Dict[str, pd.DataFrame] = {}
    entries: List[Dict[str, Any]] = []
    curves: List[Dict[str, Any]] = []
    issues: List[Dict[str, Any]] = []

    for combo in combos:
        params = device_params_from_dict({**config["device"], **dict(combo)})
        rates = derive_rates(params)
        curve = combo_name(combo)
        curves.append({"name": curve, "device": params.to_dict(), "derived": rates.to_dict()})

        curve_tables, curve_entries, curve_issues = run_pump_curves(
            SWEEP_NAME, curve, params, (variant,), False, P_grid, pf_model, solver, workers
        )
        tables.update(curve_tables)
        entries.extend(curve_entries)
        issues.extend(curve_issues)

    total_rows = sum(len(df) for df in tables.values())
    logger.info(f"Étape 2: Écriture de {len(tables)} tables ({total_rows} lignes) dans {sweep_dir}")
    manifest = {
        "preset": SWEEP_NAME,
        "description": "Balayage cartésien: " + ", ".join(f"{key} ({len(values)})" for key, values in grid.items()),
        "bundle": None,
        "kind": "pump",
        "code_version": __version__,
        "pf_model": pf_model.name,
        "variants": [variant.value],
        "config": manifest_config(config),
        "pump_grid": [float(P) for P in P_grid],
        "curves": curves,
        "tables": sorted(entries, key=lambda entry: entry["file"]),
        "peaks": {},
        "columns": COLUMN_UNITS
    }
    written = publish_outputs(
        sweep_dir, os.path.join(out_root, "archive"), SWEEP_NAME, tables, manifest,
        bool(config["run"].get("archive", True))
    )
    return written, issues, total_rows
