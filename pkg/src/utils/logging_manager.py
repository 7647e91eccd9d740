"""
Module de gestion des logs pour le simulateur de LED.
Configure le logger du paquet pour une exécution (console + fichier horodaté)
et fournit les loggers des modules de calcul.
"""

import logging
import os
from datetime import datetime
from typing import Optional


# Nom du logger racine du paquet: tous les modules (src.led.*) s'y rattachent
PACKAGE_LOGGER = "src"

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def setup_logger(
    logger_name: str,
    log_file: Optional[str] = None,
    console_level: int = logging.INFO,
    file_level: int = logging.DEBUG
) -> logging.Logger:
    """
    Configure et retourne un logger avec le nom spécifié.

    Les itérations du solveur sont journalisées au niveau DEBUG: elles ne vont
    que dans le fichier avec les niveaux par défaut.

    Args:
        logger_name: Nom du logger à configurer
        log_file: Chemin du fichier de log (si None, pas de logging dans un fichier)
        console_level: Niveau de logging pour la console
        file_level: Niveau de logging pour le fichier

    Returns:
        Logger configuré
    """
    logger = logging.getLogger(logger_name)
    logger.setLevel(logging.DEBUG)

    # Éviter les handlers dupliqués (plusieurs commandes dans un même processus)
    if logger.hasHandlers():
        logger.handlers.clear()

    formatter = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT)

    console_handler = logging.StreamHandler()
    console_handler.setLevel(console_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)

        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setLevel(file_level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def setup_run_logger(
    command: str,
    log_dir: str = "logs",
    console_level: int = logging.INFO
) -> logging.Logger:
    """
    Configure le logger du paquet pour une commande de la ligne de commande.

    Le fichier de log est horodaté (logs/<commande>_<AAAAmmjj_HHMMSS>.log); il
    ne fait jamais partie des sorties déterministes d'un run.

    Args:
        command: Nom de la commande (run, sweep, validate)
        log_dir: Répertoire des logs
        console_level: Niveau de logging pour la console

    Returns:
        Logger du paquet configuré
    """
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    log_file = os.path.join(log_dir, f"{command}_{timestamp}.log")
    return setup_logger(PACKAGE_LOGGER, log_file, console_level=console_level)


def get_logger(name: str) -> logging.Logger:
    """
    Récupère un logger existant ou en crée un nouveau.

    Args:
        name: Nom du logger à récupérer (en général __name__ du module)

    Returns:
        Logger demandé
    """
    return logging.getLogger(name)
