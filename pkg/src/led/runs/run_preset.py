"""
Module principal d'exécution d'un preset.
Responsable de l'orchestration complète: résolution des courbes, mise en
table, archivage, écriture des tables, du manifeste et du rapport d'audit.
"""

import os
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from src import __version__
from src.led.errors import WindowTooNarrow
from src.led.params.derive_rates import derive_rates
from src.led.params.device_params import DerivedRates, DeviceParams
from src.led.pf.pf_model import PFModel
from src.led.runs.build_rows import (
    count_flagged,
    enhancement_rows,
    point_status,
    pump_rows,
    spectrum_rows
)
from src.led.runs.error_reporting.generate_error_report import generate_error_report
from src.led.runs.output_structure import COLUMN_UNITS, ERROR_REPORT_FILE, MANIFEST_FILE
from src.led.runs.presets import KIND_PUMP, Preset, curve_name, get_preset
from src.led.runs.run_settings import (
    device_from_config,
    grid_config_from,
    pf_model_from,
    pump_grid_from,
    solver_config_from
)
from src.led.runs.write_outputs import archive_previous_outputs, write_manifest, write_table
from src.led.solver.build_spectrum_table import build_spectrum_table
from src.led.solver.find_crs_peaks import find_crs_peaks
from src.led.solver.operating_point import OperatingPoint, solve_operating_point, solve_pump_curve
from src.led.solver.solver_config import SolverConfig
from src.led.spectra.medium_state import SpectrumVariant, make_state
from src.led.spectra.spectrum_table import SpectrumGridConfig, default_omega_grid
from src.utils.logging_manager import get_logger

logger = get_logger(__name__)


def table_name(prefix: str, curve: str, suffix: str) -> str:
    return f"{prefix}_{curve}_{suffix}"


def max_quad_deviation(points: Sequence[Optional[OperatingPoint]]) -> Optional[float]:
    """Plus grand écart résidus/quadrature des points résolus (None hors backend both)."""
    deviations = [
        point.diagnostics.quad_deviation
        for point in points
        if point is not None and point.diagnostics.quad_deviation is not None
    ]
    return float(max(deviations)) if deviations else None


def table_entry(
    name: str,
    curve: str,
    quantity: str,
    variant: Optional[str],
    df: pd.DataFrame,
    quad_deviation: Optional[float] = None
) -> Dict[str, Any]:
    return {
        "file": f"{name}.csv",
        "curve": curve,
        "quantity": quantity,
        "variant": variant,
        "rows": int(len(df)),
        "flagged_rows": count_flagged(df),
        "max_quad_deviation": quad_deviation
    }


def manifest_config(config: Dict[str, Any]) -> Dict[str, Any]:
    """Configuration résolue sans la section 'run' (répertoire, threads, archivage)."""
    return {section: values for section, values in config.items() if section != "run"}


def run_pump_curves(
    prefix: str,
    curve: str,
    params: DeviceParams,
    variants: Tuple[SpectrumVariant, ...],
    with_enhancement: bool,
    P_grid: np.ndarray,
    pf_model: PFModel,
    solver: SolverConfig,
    workers: int
) -> Tuple[Dict[str, pd.DataFrame], List[Dict[str, Any]], List[Dict[str, Any]]]:
    """
    Résout p_out(P) pour chaque variante d'une courbe, et R(P) si demandé.

    Returns:
        Tuple contenant:
        - Les tables par nom
        - Les entrées de manifeste correspondantes
        - La liste des erreurs de résolution
    """
    tables: Dict[str, pd.DataFrame] = {}
    entries: List[Dict[str, Any]] = []
    issues: List[Dict[str, Any]] = []
    solved = {}

    for variant in variants:
        points, errors = solve_pump_curve(P_grid, params, variant, pf_model, solver, workers)
        for error in errors:
            error.update({"curve": curve, "variant": variant.value})
        issues.extend(errors)
        solved[variant] = (points, errors)

        name = table_name(prefix, curve, variant.value)
        tables[name] = pump_rows(P_grid, points, errors)
        entries.append(table_entry(name, curve, "pump", variant.value, tables[name], max_quad_deviation(points)))
        logger.info(f"Courbe {name}: {len(points) - len(errors)}/{len(points)} points résolus")

    if with_enhancement:
        pf_points, pf_errors = solved[SpectrumVariant.NON_PERTURBATIVE]
        zero_points, zero_errors = solved[SpectrumVariant.ZERO_ORDER]
        name = table_name(prefix, curve, "R")
        tables[name] = enhancement_rows(P_grid, pf_points, zero_points, list(pf_errors) + list(zero_errors))
        entries.append(table_entry(
            name, curve, "enhancement", None, tables[name],
            max_quad_deviation(list(pf_points) + list(zero_points))
        ))

    return tables, entries, issues


def run_spectrum_curves(
    prefix: str,
    curve: str,
    params: DeviceParams,
    rates: DerivedRates,
    variants: Tuple[SpectrumVariant, ...],
    P: float,
    pf_model: PFModel,
    solver: SolverConfig,
    grid: SpectrumGridConfig
) -> Tuple[Dict[str, pd.DataFrame], List[Dict[str, Any]], Dict[str, Any], List[Dict[str, Any]]]:
    """
    Spectres p_out(ω) de chaque variante au point de fonctionnement de pompe P,
    sur une grille commune, avec l'analyse des pics de CRS.

    Returns:
        Tuple (tables, entrées de manifeste, pics par table, erreurs)
    """
    tables: Dict[str, pd.DataFrame] = {}
    entries: List[Dict[str, Any]] = []
    peaks: Dict[str, Any] = {}
    issues: List[Dict[str, Any]] = []
    omega = default_omega_grid(rates, config=grid)

    for variant in variants:
        name = table_name(prefix, curve, variant.value)
        try:
            point = solve_operating_point(P, params, variant, pf_model, solver)
            state = make_state(point.N_e, params.N0, point.delta2_Ne, P)
            table = build_spectrum_table(rates, state, variant, grid, solver, omega)
        except Exception as error:
            logger.error(f"Échec du spectre {name}: {error}")
            issues.append({
                "type": type(error).__name__,
                "severity": "error",
                "curve": curve,
                "variant": variant.value,
                "P": P,
                "message": str(error)
            })
            tables[name] = spectrum_rows(omega, None, None, point_status(None, issues[-1]))
            entries.append(table_entry(name, curve, "spectrum", variant.value, tables[name]))
            continue

        tables[name] = spectrum_rows(omega, table, point, point_status(point))
        entries.append(table_entry(name, curve, "spectrum", variant.value, tables[name], max_quad_deviation([point])))

        try:
            report = find_crs_peaks(table)
            peaks[name] = {
                "is_split": report.is_split,
                "peak_position": report.peak_positions[1],
                "peak_height": report.peak_heights[1],
                "splitting": report.splitting
            }
            logger.info(
                f"Spectre {name}: dédoublement {report.splitting:.6g} rad/s "
                f"({'CRS' if report.is_split else 'pic unique'})"
            )
        except WindowTooNarrow as error:
            logger.warning(f"Spectre {name}: {error}")
            peaks[name] = {"error": str(error)}
            issues.append({
                "type": "WindowTooNarrow",
                "severity": "warning",
                "curve": curve,
                "variant": variant.value,
                "message": str(error)
            })

    return tables, entries, peaks, issues


def publish_outputs(
    output_dir: str,
    archive_root: str,
    name: str,
    tables: Dict[str, pd.DataFrame],
    manifest: Dict[str, Any],
    archive: bool
) -> List[str]:
    """
    Archive le run précédent puis écrit tables, manifeste et rapport d'audit
    dans un ordre fixe.

    Returns:
        Liste des fichiers écrits
    """
    if archive:
        archive_previous_outputs(output_dir, archive_root, name)
    os.makedirs(output_dir, exist_ok=True)

    written = []
    for table in sorted(tables):
        written.append(write_table(tables[table], os.path.join(output_dir, f"{table}.csv")))
    written.append(write_manifest(manifest, os.path.join(output_dir, MANIFEST_FILE)))

    report_path = os.path.join(output_dir, ERROR_REPORT_FILE)
    if generate_error_report(tables, report_path):
        written.append(report_path)
        logger.warning(f"Lignes signalées: rapport d'audit généré ({report_path})")
    elif os.path.exists(report_path):
        os.remove(report_path)

    return written


def run_preset(
    name: str,
    config: Dict[str, Any],
    output_dir: Optional[str] = None
) -> Tuple[List[str], List[Dict[str, Any]]]:
    """
    Exécute un preset de figure.

    Les erreurs du solveur sont enregistrées ligne par ligne: la ligne est
    conservée, signalée, et le run continue.

    Args:
        name: Nom du preset (fig2 ... fig7b)
        config: Configuration validée (surcharges appliquées)
        output_dir: Répertoire racine des sorties (sinon run.out)

    Returns:
        Tuple contenant:
        - La liste des fichiers écrits
        - La liste des erreurs et avertissements de résolution
    """
    preset: Preset = get_preset(name)
    out_root = output_dir or config["run"]["out"]
    preset_dir = os.path.join(out_root, name)

    base = device_from_config(config)
    solver = solver_config_from(config)
    pf_model = pf_model_from(config)
    grid = grid_config_from(config)
    workers = int(config["run"].get("workers", 1))
    P_grid = pump_grid_from(config) if preset.kind == KIND_PUMP else None

    logger.info(f"Étape 1: Résolution du preset {name} ({preset.description}), modèle de PF {pf_model.name}")
    tables: Dict[str, pd.DataFrame] = {}
    entries: List[Dict[str, Any]] = []
    curves: List[Dict[str, Any]] = []
    peaks: Dict[str, Any] = {}
    issues: List[Dict[str, Any]] = []

    for n_c, N0 in preset.curves:
        params = preset.device_for(base, n_c, N0)
        rates = derive_rates(params)
        curve = curve_name(n_c, N0)
        curves.append({"name": curve, "device": params.to_dict(), "derived": rates.to_dict()})

        if preset.kind == KIND_PUMP:
            curve_tables, curve_entries, curve_issues = run_pump_curves(
                name, curve, params, preset.variants, preset.with_enhancement,
                P_grid, pf_model, solver, workers
            )
        else:
            curve_tables, curve_entries, curve_peaks, curve_issues = run_spectrum_curves(
                name, curve, params, rates, preset.variants,
                float(config["spectrum"]["P"]), pf_model, solver, grid
            )
            peaks.update(curve_peaks)
        tables.update(curve_tables)
        entries.extend(curve_entries)
        issues.extend(curve_issues)

    logger.info(f"Étape 2: Écriture de {len(tables)} tables dans {preset_dir}")
    manifest = {
        "preset": name,
        "description": preset.description,
        "bundle": preset.bundle,
        "kind": preset.kind,
        "code_version": __version__,
        "pf_model": pf_model.name,
        "variants": [variant.value for variant in preset.variants],
        "config": manifest_config(config),
        "pump_grid": [float(P) for P in P_grid] if P_grid is not None else None,
        "curves": curves,
        "tables": sorted(entries, key=lambda entry: entry["file"]),
        "peaks": peaks,
        "columns": COLUMN_UNITS
    }
    written = publish_outputs(
        preset_dir, os.path.join(out_root, "archive"), name, tables, manifest,
        bool(config["run"].get("archive", True))
    )

    logger.info(f"Preset {name} terminé: {len(written)} fichiers, {len(issues)} incidents")
    return written, issues
