"""
Chargement et validation de la configuration JSON d'un run.
La configuration utilisateur est fusionnée sur config/default.json, les
surcharges --set section.clé=valeur sont appliquées, puis le résultat est
validé avec jsonschema.
"""

import copy
import json
import os
from typing import Any, Dict, List, Optional, Sequence

import jsonschema

from src.led.errors import ConfigError
from src.led.runs.input_structure import CONFIG_SCHEMA, DEFAULT_CONFIG
from src.utils.logging_manager import get_logger

logger = get_logger(__name__)

DEFAULT_CONFIG_FILE = os.path.join(
    os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))), "config", "default.json"
)


def _merge(base: Dict[str, Any], update: Dict[str, Any]) -> Dict[str, Any]:
    """Fusion récursive de update dans une copie de base."""
    merged = copy.deepcopy(base)
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def validate_config(config: Dict[str, Any]) -> List[Dict[str, Any]]:
    """
    Valide la configuration contre CONFIG_SCHEMA.

    Args:
        config: Configuration complète

    Returns:
        Liste de toutes les violations du schéma (vide si valide)
    """
    validator = jsonschema.Draft7Validator(CONFIG_SCHEMA)
    issues = []
    for error in sorted(validator.iter_errors(config), key=lambda e: list(e.path)):
        issues.append({
            "type": "schema_validation",
            "severity": "error",
            "field": ".".join(str(part) for part in error.path) or "<racine>",
            "message": error.message
        })
    return issues


def parse_override(override: str) -> tuple:
    """
    Décompose 'section.clé=valeur'; la valeur est lue en JSON, sinon gardée
    comme chaîne.

    Returns:
        Tuple (section, clé, valeur)
    """
    if "=" not in override:
        raise ConfigError(f"Surcharge invalide (attendu section.clé=valeur): '{override}'")
    path, raw_value = override.split("=", 1)
    parts = path.strip().split(".")
    if len(parts) != 2 or not all(parts):
        raise ConfigError(f"Chemin de surcharge invalide (attendu section.clé): '{path}'")
    try:
        value = json.loads(raw_value)
    except json.JSONDecodeError:
        value = raw_value
    return parts[0], parts[1], value


def apply_overrides(config: Dict[str, Any], overrides: Optional[Sequence[str]]) -> Dict[str, Any]:
    """
    Applique les surcharges --set à une copie de la configuration.

    Raises:
        ConfigError: Section ou clé inconnue
    """
    result = copy.deepcopy(config)
    for override in overrides or []:
        section, key, value = parse_override(override)
        if section not in CONFIG_SCHEMA["properties"]:
            raise ConfigError(f"Section inconnue dans la surcharge: '{section}'")
        if key not in CONFIG_SCHEMA["properties"][section]["properties"]:
            raise ConfigError(f"Clé inconnue dans la section '{section}': '{key}'")
        result.setdefault(section, {})[key] = value
        logger.info(f"Surcharge appliquée: {section}.{key} = {value!r}")
    return result


def _read_json(path: str) -> Dict[str, Any]:
    """Lit un objet JSON de configuration."""
    if not os.path.exists(path):
        raise ConfigError(f"Fichier de configuration introuvable: {path}")
    try:
        with open(path, 'r', encoding='utf-8') as file:
            content = json.load(file)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Erreur lors de la lecture de {path}: {str(e)}")
    if not isinstance(content, dict):
        raise ConfigError(f"La configuration doit être un objet JSON: {path}")
    return content


def load_config(
    path: Optional[str] = None,
    overrides: Optional[Sequence[str]] = None,
    defaults_path: Optional[str] = None
) -> Dict[str, Any]:
    """
    Charge la configuration d'un run.

    La base est config/default.json (DEFAULT_CONFIG si le fichier est absent).

    Args:
        path: Fichier JSON (optionnel); ses sections sont fusionnées sur la base
        overrides: Surcharges 'section.clé=valeur'
        defaults_path: Fichier de base (par défaut config/default.json)

    Returns:
        Configuration validée

    Raises:
        ConfigError: Fichier illisible ou configuration non conforme au schéma
    """
    defaults_path = defaults_path or DEFAULT_CONFIG_FILE
    if os.path.exists(defaults_path):
        config = _merge(DEFAULT_CONFIG, _read_json(defaults_path))
    else:
        logger.warning(f"{defaults_path} introuvable: valeurs par défaut internes utilisées")
        config = copy.deepcopy(DEFAULT_CONFIG)

    if path:
        config = _merge(config, _read_json(path))
        logger.info(f"Configuration chargée: {path}")

    config = apply_overrides(config, overrides)

    issues = validate_config(config)
    if issues:
        details = "; ".join(f"{issue['field']}: {issue['message']}" for issue in issues)
        raise ConfigError(f"Configuration invalide ({len(issues)} erreurs): {details}", issues)
    return config
