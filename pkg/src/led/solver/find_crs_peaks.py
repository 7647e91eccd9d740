"""
Détection du dédoublement de Rabi collectif (CRS) dans un spectre tabulé.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy import signal

from src.led.errors import WindowTooNarrow
from src.led.spectra.spectrum_table import SpectrumTable


@dataclass(frozen=True)
class PeakReport:
    """
    Attributes:
        peak_positions: (−ω_peak, +ω_peak) (rad/s)
        peak_heights: p_out(ω) aux deux maxima (photons/s par rad/s)
        splitting: 2·ω_peak (rad/s)
        is_split: False si le maximum unique est en ω = 0
    """
    peak_positions: Tuple[float, float]
    peak_heights: Tuple[float, float]
    splitting: float
    is_split: bool


def _refine(omega: np.ndarray, values: np.ndarray, index: int) -> Tuple[float, float]:
    """Sommet de la parabole passant par les trois points autour de index."""
    window = slice(index - 1, index + 2)
    center = omega[index]
    step = omega[index + 1] - omega[index - 1]
    local = (omega[window] - center) / step
    a, b, c = np.polyfit(local, values[window], 2)
    if a >= 0.0:
        return float(center), float(values[index])
    # Le sommet reste entre les deux voisins
    vertex = float(np.clip(-b / (2.0 * a), local[0], local[-1]))
    return float(center + vertex * step), float(np.polyval([a, b, c], vertex))


def find_crs_peaks(table: SpectrumTable) -> PeakReport:
    """
    Localise le maximum principal de p_out(ω) sur le demi-axe ω ≥ 0.

    Le spectre étant pair, le point ω = 0 est complété par son voisin miroir
    pour qu'un maximum central soit détecté comme pic.

    Args:
        table: Spectre tabulé sur une grille symétrique contenant 0

    Returns:
        Rapport sur les pics

    Raises:
        WindowTooNarrow: Le maximum principal est au bord de la grille
    """
    omega = np.asarray(table.omega, dtype=float)
    values = np.asarray(table.p_out_of_omega, dtype=float)
    half = omega >= 0.0
    half_omega = omega[half]
    half_values = values[half]
    if half_omega.size < 3 or half_omega[0] != 0.0:
        raise ValueError("La grille doit être symétrique et contenir ω = 0")

    padded = np.concatenate([half_values[1:2], half_values])
    peaks, _ = signal.find_peaks(padded)
    peaks = peaks - 1

    top = int(np.argmax(half_values))
    if top == half_values.size - 1:
        raise WindowTooNarrow(
            f"Maximum au bord de la fenêtre (ω = {half_omega[-1]:.6g} rad/s): élargir la grille"
        )
    if top not in peaks:
        # Plateau: find_peaks renvoie le milieu du plateau
        top = int(peaks[np.argmax(half_values[peaks])]) if peaks.size else top

    if top == 0:
        height = float(half_values[0])
        return PeakReport((0.0, 0.0), (height, height), 0.0, False)

    position, height = _refine(half_omega, half_values, top)
    return PeakReport((-position, position), (height, height), 2.0 * position, position > 0.0)
