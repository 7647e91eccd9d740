"""
Mise en forme des résultats du solveur en tables (colonnes TABLE_COLUMNS).
Les lignes en échec sont conservées avec des NaN et un statut d'erreur.
"""

import math
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from src.led.runs.output_structure import (
    STATUS_ERROR_PREFIX,
    STATUS_OK,
    STATUS_WARNING_PREFIX,
    TABLE_COLUMNS
)
from src.led.solver.enhancement_factor import enhancement_ratio
from src.led.solver.operating_point import OperatingPoint
from src.led.spectra.spectrum_table import SpectrumTable


def point_status(point: Optional[OperatingPoint], error: Optional[Dict[str, Any]] = None) -> str:
    """'ok', 'warning:<types>' ou 'error:<exception>'."""
    if point is None:
        return STATUS_ERROR_PREFIX + (error or {}).get("type", "LedSimulationError")
    if point.diagnostics.warnings:
        return STATUS_WARNING_PREFIX + ";".join(point.diagnostics.warnings)
    return STATUS_OK


def _merge_status(*statuses: str) -> str:
    errors = [s for s in statuses if s.startswith(STATUS_ERROR_PREFIX)]
    if errors:
        return errors[0]
    kinds: List[str] = []
    for status in statuses:
        if status.startswith(STATUS_WARNING_PREFIX):
            for kind in status[len(STATUS_WARNING_PREFIX):].split(";"):
                if kind not in kinds:
                    kinds.append(kind)
    return STATUS_WARNING_PREFIX + ";".join(kinds) if kinds else STATUS_OK


def _row(abscissa: float, value: float, point: Optional[OperatingPoint], status: str) -> Dict[str, Any]:
    if point is None:
        return {
            "P_or_omega": abscissa, "value": math.nan, "N_e": math.nan, "n": math.nan,
            "delta2_Ne": math.nan, "stability_margin": math.nan, "narrowness_ratio": math.nan,
            "residual": math.nan, "status": status
        }
    return {
        "P_or_omega": abscissa,
        "value": value,
        "N_e": point.N_e,
        "n": point.n,
        "delta2_Ne": point.delta2_Ne,
        "stability_margin": point.diagnostics.stability_margin,
        "narrowness_ratio": point.diagnostics.narrowness_ratio,
        "residual": point.diagnostics.residual,
        "status": status
    }


def _errors_by_pump(errors: Sequence[Dict[str, Any]]) -> Dict[float, Dict[str, Any]]:
    return {error["P"]: error for error in errors}


def pump_rows(
    P_grid: Sequence[float],
    points: Sequence[Optional[OperatingPoint]],
    errors: Sequence[Dict[str, Any]] = ()
) -> pd.DataFrame:
    """Table p_out(P) d'une courbe."""
    by_pump = _errors_by_pump(errors)
    rows = []
    for P, point in zip(P_grid, points):
        status = point_status(point, by_pump.get(P))
        rows.append(_row(float(P), point.p_out if point else math.nan, point, status))
    return pd.DataFrame(rows, columns=TABLE_COLUMNS)


def enhancement_rows(
    P_grid: Sequence[float],
    with_pf: Sequence[Optional[OperatingPoint]],
    without_pf: Sequence[Optional[OperatingPoint]],
    errors: Sequence[Dict[str, Any]] = ()
) -> pd.DataFrame:
    """
    Table R(P); les diagnostics sont ceux du point avec fluctuations, le
    statut combine les deux résolutions.
    """
    by_pump = _errors_by_pump(errors)
    rows = []
    for P, pf_point, zero_point in zip(P_grid, with_pf, without_pf):
        status = _merge_status(
            point_status(pf_point, by_pump.get(P)),
            point_status(zero_point, by_pump.get(P))
        )
        if pf_point is None or zero_point is None:
            rows.append(_row(float(P), math.nan, None, status))
        else:
            R = enhancement_ratio(pf_point.p_out, zero_point.p_out)
            rows.append(_row(float(P), R, pf_point, status))
    return pd.DataFrame(rows, columns=TABLE_COLUMNS)


def spectrum_rows(
    omega: np.ndarray,
    table: Optional[SpectrumTable],
    point: Optional[OperatingPoint],
    status: str
) -> pd.DataFrame:
    """Table p_out(ω); les colonnes d'état répètent le point de fonctionnement."""
    if table is None or point is None:
        return pd.DataFrame([_row(float(w), math.nan, None, status) for w in omega], columns=TABLE_COLUMNS)
    df = pd.DataFrame({
        "P_or_omega": np.asarray(table.omega, dtype=float),
        "value": np.asarray(table.p_out_of_omega, dtype=float)
    })
    df["N_e"] = point.N_e
    df["n"] = point.n
    df["delta2_Ne"] = point.delta2_Ne
    df["stability_margin"] = point.diagnostics.stability_margin
    df["narrowness_ratio"] = point.diagnostics.narrowness_ratio
    df["residual"] = point.diagnostics.residual
    df["status"] = status
    return df[TABLE_COLUMNS]


def count_flagged(df: pd.DataFrame) -> int:
    return int((df["status"] != STATUS_OK).sum())
