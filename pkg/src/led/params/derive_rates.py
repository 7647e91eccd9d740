"""
Calcul des constantes dérivées (fréquence porteuse, volume de mode, fréquence
de Rabi, gain différentiel, facteur β, inversion de seuil).
"""

import math

from src.led.errors import ParameterValidationError
from src.led.params.device_params import DerivedRates, DeviceParams
from src.led.params.physical_constants import PHYSICAL_CONSTANTS
from src.led.params.validate_device_params import validate_device_params
from src.utils.logging_manager import get_logger

logger = get_logger(__name__)


def derive_rates(params: DeviceParams) -> DerivedRates:
    """
    Calcule les constantes dérivées d'un jeu de paramètres.

    Args:
        params: Paramètres bruts du dispositif

    Returns:
        Constantes dérivées

    Raises:
        ParameterValidationError: Si un paramètre n'est pas physique (le champ
            fautif est nommé)
    """
    issues = validate_device_params(params)
    errors = [issue for issue in issues if issue["severity"] == "error"]
    if errors:
        first = errors[0]
        raise ParameterValidationError(first["field"], first["message"])

    const = PHYSICAL_CONSTANTS
    omega0 = 2.0 * math.pi * const.c_light / params.lambda0
    V_min = (params.lambda0 / (2.0 * params.n_r)) ** 3
    V_c = params.n_c * V_min
    Omega = (params.d / params.n_r) * math.sqrt(omega0 / (const.eps0 * const.hbar * V_c))

    if not Omega > 0:
        raise ParameterValidationError("d", "Couplage de Rabi nul: N_th infini")

    g_diff = 4.0 * Omega ** 2 * params.f / (2.0 * params.kappa + params.gamma_perp)
    beta = g_diff / (g_diff + params.gamma_par)
    N_th = params.kappa * params.gamma_perp / (2.0 * Omega ** 2 * params.f)

    rates = DerivedRates(
        omega0=omega0,
        V_min=V_min,
        V_c=V_c,
        Omega=Omega,
        g_diff=g_diff,
        beta=beta,
        N_th=N_th,
        kappa=float(params.kappa),
        gamma_perp=float(params.gamma_perp),
        gamma_par=float(params.gamma_par),
        f=float(params.f),
        N0=int(params.N0)
    )
    logger.debug(
        f"Constantes dérivées: Ω = {Omega:.6g} rad/s, g = {g_diff:.6g} rad/s, "
        f"β = {beta:.6g}, N_th = {N_th:.6g}"
    )
    return rates
