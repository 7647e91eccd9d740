"""
Écriture et relecture des tables CSV et du manifeste, archivage des sorties
précédentes d'un preset.
"""

import glob
import json
import os
import shutil
from datetime import datetime
from typing import Any, Dict, List, Optional

import jsonschema
import pandas as pd

from src.led.runs.output_structure import MANIFEST_FILE, MANIFEST_SCHEMA, NUMERIC_COLUMNS, TABLE_COLUMNS
from src.utils.logging_manager import get_logger

logger = get_logger(__name__)

# 17 chiffres significatifs: relecture exacte des flottants
FLOAT_FORMAT = "%.17g"


def write_table(df: pd.DataFrame, path: str) -> str:
    """
    Écrit une table au format CSV (colonnes TABLE_COLUMNS).

    Args:
        df: Table à écrire
        path: Chemin du fichier

    Returns:
        Chemin du fichier écrit
    """
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    df[TABLE_COLUMNS].to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return path


def read_table(path: str) -> pd.DataFrame:
    """Relit une table écrite par write_table (flottants relus à l'identique)."""
    df = pd.read_csv(path, float_precision="round_trip", keep_default_na=True)
    for column in NUMERIC_COLUMNS:
        df[column] = df[column].astype(float)
    df["status"] = df["status"].astype(str)
    return df[TABLE_COLUMNS]


def write_manifest(manifest: Dict[str, Any], path: str) -> str:
    """
    Valide le manifeste contre MANIFEST_SCHEMA puis l'écrit (clés triées).

    Raises:
        jsonschema.exceptions.ValidationError: Manifeste non conforme
    """
    jsonschema.validate(instance=manifest, schema=MANIFEST_SCHEMA)
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as file:
        json.dump(manifest, file, indent=2, sort_keys=True, ensure_ascii=False)
        file.write("\n")
    return path


def read_manifest(path: str) -> Dict[str, Any]:
    with open(path, 'r', encoding='utf-8') as file:
        return json.load(file)


def archive_previous_outputs(preset_dir: str, archive_root: str, preset_name: str) -> Optional[str]:
    """
    Déplace les sorties d'un run précédent vers archive/<preset>_<horodatage>/.

    Args:
        preset_dir: Répertoire des sorties du preset
        archive_root: Répertoire racine des archives
        preset_name: Nom du preset

    Returns:
        Répertoire d'archive créé, ou None s'il n'y avait rien à archiver
    """
    patterns = ["*.csv", MANIFEST_FILE, "*.xlsx"]
    files: List[str] = []
    for pattern in patterns:
        files.extend(sorted(glob.glob(os.path.join(preset_dir, pattern))))

    if not files:
        logger.info(f"Aucun fichier à archiver pour le preset {preset_name}")
        return None

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    archive_dir = os.path.join(archive_root, f"{preset_name}_{timestamp}")
    suffix = 1
    while os.path.exists(archive_dir):
        archive_dir = os.path.join(archive_root, f"{preset_name}_{timestamp}_{suffix}")
        suffix += 1
    os.makedirs(archive_dir)

    for file_path in files:
        filename = os.path.basename(file_path)
        try:
            shutil.move(file_path, os.path.join(archive_dir, filename))
        except OSError as e:
            logger.error(f"Erreur lors de l'archivage de {filename}: {str(e)}")

    logger.info(f"{len(files)} fichiers archivés dans {archive_dir}")
    return archive_dir
