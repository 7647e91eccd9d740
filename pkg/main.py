#!/usr/bin/env python
"""
Script principal du simulateur de LED superradiante.
Permet de lancer un preset de figure, un balayage de paramètres ou la batterie
de propriétés, avec archivage automatique des sorties précédentes.

Exemples:
    python main.py run --preset fig5
    python main.py run --preset fig6 --pf-model langevin-rate --quad both
    python main.py sweep --grid P=1 --grid n_c=100,50,10 --variant NonPerturbative
    python main.py validate
    python main.py list-presets
"""

import argparse
import os
import sys
from typing import Any, Dict, List, Optional

# Ajouter le répertoire racine au chemin Python
sys.path.append(os.path.abspath('.'))

from src.led.errors import ConfigError, LedSimulationError, SweepError
from src.led.runs import list_presets, parse_grid, run_preset, sweep
from src.led.runs.output_structure import MANIFEST_FILE
from src.led.runs.run_settings import pf_model_from, solver_config_from
from src.led.runs.write_outputs import read_manifest, write_table
from src.led.spectra.medium_state import SpectrumVariant
from src.led.validation.property_suite import run_property_suite, suite_passed
from src.utils.config_loader import load_config
from src.utils.logging_manager import setup_run_logger

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

VALIDATION_REPORT_FILE = "validation_report.csv"


def build_parser() -> argparse.ArgumentParser:
    """Construit le parser des sous-commandes."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, default=None,
                        help="Fichier de configuration JSON (fusionné sur config/default.json)")
    common.add_argument("--set", dest="overrides", action="append", default=[], metavar="SECTION.CLÉ=VALEUR",
                        help="Surcharge d'une valeur de configuration (répétable)")
    common.add_argument("--pf-model", type=str, default=None,
                        help="Modèle de dispersion des populations (binomial, langevin-rate, none)")
    common.add_argument("--quad", type=str, choices=["residue", "adaptive", "both"], default=None,
                        help="Méthode d'intégration du spectre; 'both' compare les deux")
    common.add_argument("--workers", type=int, default=None,
                        help="Nombre de threads pour les points de pompe")
    common.add_argument("--out", type=str, default=None,
                        help="Répertoire racine des sorties")
    common.add_argument("--no-archive", action="store_true",
                        help="Désactive l'archivage automatique des anciennes sorties")

    parser = argparse.ArgumentParser(description="Simulateur de LED superradiante (Maxwell-Bloch-Langevin)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    run_parser = subparsers.add_parser("run", parents=[common], help="Exécute un preset de figure")
    run_parser.add_argument("--preset", type=str, required=True, help="Nom du preset (fig2 ... fig7b)")

    sweep_parser = subparsers.add_parser("sweep", parents=[common], help="Balayage cartésien de paramètres")
    sweep_parser.add_argument("--grid", action="append", default=[], metavar="CLÉ=V1,V2,...",
                              help="Valeurs d'une clé (P ou champ de la section device), répétable")
    sweep_parser.add_argument("--variant", type=str, default=SpectrumVariant.NON_PERTURBATIVE.value,
                              help="Traitement des fluctuations (ZeroOrder, SpontaneousOnly, Perturbative, NonPerturbative)")

    validate_parser = subparsers.add_parser("validate", parents=[common], help="Exécute la batterie de propriétés")
    validate_parser.add_argument("--seed-presets", type=str, default="fig2,fig5",
                                 help="Presets de courbes p_out(P) utilisés comme cas")

    subparsers.add_parser("list-presets", help="Liste les presets disponibles")
    return parser


def collect_overrides(args: argparse.Namespace) -> List[str]:
    """Traduit les options raccourcies en surcharges section.clé=valeur (après les --set)."""
    overrides = list(args.overrides)
    if args.pf_model:
        overrides.append(f"pf.model={args.pf_model}")
    if args.quad:
        overrides.append(f"solver.quad_backend={args.quad}")
    if args.workers is not None:
        overrides.append(f"run.workers={args.workers}")
    if args.out:
        overrides.append(f"run.out={args.out}")
    if args.no_archive:
        overrides.append("run.archive=false")
    return overrides


def print_presets() -> None:
    for preset in list_presets():
        print(f"{preset.name:6s} {preset.bundle:6s} {preset.kind:8s} {preset.description}")


def print_quad_deviations(written: List[str]) -> None:
    """Écart maximal résidus/quadrature par table, lu dans le manifeste (backend both)."""
    manifests = [path for path in written if os.path.basename(path) == MANIFEST_FILE]
    if not manifests:
        return
    deviations = {
        entry["file"]: entry["max_quad_deviation"]
        for entry in read_manifest(manifests[0])["tables"]
        if entry.get("max_quad_deviation") is not None
    }
    if not deviations:
        return
    print("-" * 40)
    print(f"Écart max résidus/quadrature: {max(deviations.values()):.3g}")
    for name, deviation in deviations.items():
        print(f"  {name}: {deviation:.3g}")


def print_summary(title: str, written: List[str], issues: List[Dict[str, Any]]) -> None:
    """Affiche le récapitulatif d'un run."""
    print("\n" + "=" * 80)
    print(title)
    print("=" * 80)
    for path in written:
        print(f"  {path}")
    errors = [issue for issue in issues if issue.get("severity") == "error"]
    warnings = [issue for issue in issues if issue.get("severity") != "error"]
    print("-" * 40)
    print(f"Fichiers écrits: {len(written)}")
    print(f"Points en erreur: {len(errors)}, avertissements: {len(warnings)}")
    for issue in errors[:10]:
        print(f"  ❌ P={issue.get('P')}: {issue.get('message')}")
    print_quad_deviations(written)


def command_run(args: argparse.Namespace, config: Dict[str, Any], logger) -> int:
    written, issues = run_preset(args.preset, config)
    print_summary(f"PRESET {args.preset}", written, issues)
    logger.info(f"Fin du preset {args.preset}")
    return EXIT_OK


def command_sweep(args: argparse.Namespace, config: Dict[str, Any], logger) -> int:
    grid = parse_grid(args.grid)
    variant = SpectrumVariant.parse(args.variant)
    written, issues, total_rows = sweep(grid, variant, pf_model_from(config), config)
    print_summary(f"BALAYAGE ({total_rows} lignes)", written, issues)
    logger.info("Fin du balayage")
    return EXIT_OK


def command_validate(args: argparse.Namespace, config: Dict[str, Any], logger) -> int:
    seeds = [name.strip() for name in args.seed_presets.split(",") if name.strip()]
    report = run_property_suite(
        seeds, solver_config_from(config), pf_model_from(config), int(config["run"]["workers"])
    )
    out_dir = config["run"]["out"]
    os.makedirs(out_dir, exist_ok=True)
    report_path = write_table(report, os.path.join(out_dir, VALIDATION_REPORT_FILE))

    failed = report[~report["passed"]]
    print("\n" + "=" * 80)
    print("BATTERIE DE PROPRIÉTÉS")
    print("=" * 80)
    for _, row in failed.iterrows():
        marker = "❌" if row["severity"] == "error" else "⚠️"
        print(f"  {marker} {row['check']} [{row['case']}]: mesuré {row['measured']}, attendu {row['expected']} {row['message']}")
    print("-" * 40)
    print(f"Contrôles: {len(report)}, échecs: {len(failed)}")
    print(f"Rapport: {report_path}")

    passed = suite_passed(report)
    logger.info(f"Batterie {'réussie' if passed else 'en échec'}")
    return EXIT_OK if passed else EXIT_FAILURE


COMMANDS = {
    "run": command_run,
    "sweep": command_sweep,
    "validate": command_validate
}


def main(argv: Optional[List[str]] = None) -> int:
    """Fonction principale d'exécution."""
    args = build_parser().parse_args(argv)

    if args.command == "list-presets":
        print_presets()
        return EXIT_OK

    try:
        config = load_config(args.config, collect_overrides(args))
    except ConfigError as e:
        print(f"Erreur de configuration: {str(e)}", file=sys.stderr)
        return EXIT_USAGE

    logger = setup_run_logger(args.command, config["run"]["log_dir"])
    logger.info(f"Démarrage de la commande {args.command}")

    try:
        return COMMANDS[args.command](args, config, logger)
    except (ConfigError, SweepError, ValueError) as e:
        logger.error(str(e))
        print(f"Erreur: {str(e)}", file=sys.stderr)
        return EXIT_USAGE
    except LedSimulationError as e:
        logger.error(f"Erreur lors de la commande {args.command}: {str(e)}")
        print(f"Erreur: {str(e)}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
