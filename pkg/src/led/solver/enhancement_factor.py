"""
Facteur d'augmentation R = p_out(avec PF)/p_out(sans PF) et part des PF dans
l'émission spontanée.
"""

from typing import Optional

from src.led.params.device_params import DeviceParams
from src.led.pf.pf_model import PFModel
from src.led.solver.operating_point import solve_operating_point
from src.led.solver.solver_config import SolverConfig
from src.led.spectra.medium_state import SpectrumVariant


def enhancement_ratio(p_out_pf: float, p_out_zero: float) -> float:
    """Rapport des puissances; 1 si aucune émission (P = 0)."""
    if p_out_zero == 0.0:
        return 1.0 if p_out_pf == 0.0 else float("inf")
    return p_out_pf / p_out_zero


def enhancement_factor(
    P: float,
    params: DeviceParams,
    pf_model: Optional[PFModel] = None,
    config: Optional[SolverConfig] = None
) -> float:
    """
    R = p_out(NonPerturbative)/p_out(ZeroOrder) aux mêmes (P, params).

    Returns:
        Facteur d'augmentation R
    """
    with_pf = solve_operating_point(P, params, SpectrumVariant.NON_PERTURBATIVE, pf_model, config)
    without_pf = solve_operating_point(P, params, SpectrumVariant.ZERO_ORDER, pf_model, config)
    return enhancement_ratio(with_pf.p_out, without_pf.p_out)


def spontaneous_emission_share(
    P: float,
    params: DeviceParams,
    pf_model: Optional[PFModel] = None,
    config: Optional[SolverConfig] = None
) -> float:
    """Gain relatif p_out(SpontaneousOnly)/p_out(ZeroOrder) − 1 à la même pompe."""
    spontaneous = solve_operating_point(P, params, SpectrumVariant.SPONTANEOUS_ONLY, pf_model, config)
    without_pf = solve_operating_point(P, params, SpectrumVariant.ZERO_ORDER, pf_model, config)
    return enhancement_ratio(spontaneous.p_out, without_pf.p_out) - 1.0
