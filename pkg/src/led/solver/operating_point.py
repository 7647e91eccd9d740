"""
Point de fonctionnement auto-cohérent.

Pour une pompe P, on cherche N_e tel que la loi de conservation de l'énergie
2κn = γ∥(P·N_g − N_e) soit satisfaite, n(N_e) étant l'intégrale du spectre.
Pour chaque N_e, une boucle interne amortie fait converger le couple
(n, δ²N_e(N_e, n)).
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize

from src.led.errors import (
    FixedPointDivergence,
    InternalSolverError,
    LedSimulationError,
    NoRoot,
    PFValidityError,
    StabilityViolation,
    ThresholdSingularity
)
from src.led.params.derive_rates import derive_rates
from src.led.params.device_params import DerivedRates, DeviceParams
from src.led.pf.narrowness_check import field_dispersion_check, narrowness_check
from src.led.pf.pf_bandwidth import pf_bandwidth
from src.led.pf.pf_dispersion import pf_dispersion
from src.led.pf.pf_model import PFModel
from src.led.solver.integrate_spectrum import IntegrationResult, integrate_spectrum_checked
from src.led.solver.solver_config import SolverConfig
from src.led.spectra.field_spectrum import relative_stability_margin
from src.led.spectra.medium_state import MediumState, SpectrumVariant, make_state
from src.utils.logging_manager import get_logger

logger = get_logger(__name__)

# Points hors du domaine stable pendant la recherche du crochet
UNSTABLE_ERRORS = (StabilityViolation, ThresholdSingularity, FixedPointDivergence)

# Écart relatif de la borne supérieure au seuil semi-classique (|s|² > 0 strictement)
THRESHOLD_GUARD = 1e-9


@dataclass
class Diagnostics:
    stability_margin: float = math.nan
    narrowness_ratio: float = math.nan
    field_dispersion_ratio: float = math.nan
    residual: float = math.nan
    quad_deviation: Optional[float] = None
    inner_iterations: int = 0
    warnings: List[str] = field(default_factory=list)


@dataclass
class OperatingPoint:
    """
    État stationnaire auto-cohérent à la pompe P.

    Attributes:
        P: Pompe normalisée
        N_e, N_g, N: Populations et inversion
        delta2_Ne: Dispersion des fluctuations de population
        n: Nombre moyen de photons
        p_out: Puissance de sortie 2κn (photons/s)
        variant: Traitement des fluctuations dans le spectre
        diagnostics: Marge de stabilité, étroitesse, bilan d'énergie, avertissements
    """
    P: float
    N_e: float
    N_g: float
    N: float
    delta2_Ne: float
    n: float
    p_out: float
    variant: SpectrumVariant
    diagnostics: Diagnostics = field(default_factory=Diagnostics)


@dataclass
class _InnerResult:
    state: MediumState
    n: float
    integration: IntegrationResult
    iterations: int


class _EnergyBalance:
    """F(N_e) = 2κn(N_e) − γ∥(P·N_g − N_e), avec mémorisation des évaluations."""

    def __init__(self, P: float, rates: DerivedRates, variant: SpectrumVariant,
                 pf_model: PFModel, config: SolverConfig):
        self.P = P
        self.rates = rates
        self.variant = variant
        self.pf_model = pf_model
        self.config = config
        self.N0 = rates.N0
        self.evaluations: Dict[float, float] = {}
        self.inner: Dict[float, _InnerResult] = {}

    def solve_inner(self, N_e: float) -> _InnerResult:
        """Point fixe amorti n ↔ δ²N_e à N_e fixé, à partir de δ²N_e(N_e, n = 0)."""
        if N_e in self.inner:
            return self.inner[N_e]

        rates, P, N0 = self.rates, self.P, self.N0
        delta2 = pf_dispersion(N_e, 0.0, P, rates, N0, self.pf_model)

        for iteration in range(1, self.config.max_outer_iters + 1):
            state = make_state(N_e, N0, delta2, P)
            integration = integrate_spectrum_checked(rates, state, self.variant, self.config)
            updated = pf_dispersion(N_e, max(integration.n, 0.0), P, rates, N0, self.pf_model)
            if abs(updated - delta2) <= self.config.ne_tol * max(abs(updated), abs(delta2)):
                result = _InnerResult(state, integration.n, integration, iteration)
                self.inner[N_e] = result
                logger.debug(
                    f"N_e = {N_e:.12g}: n = {integration.n:.12g}, δ²N_e = {delta2:.6g} "
                    f"({iteration} itérations)"
                )
                return result
            delta2 = delta2 + self.config.damping * (updated - delta2)

        raise FixedPointDivergence(N_e, self.config.max_outer_iters)

    def __call__(self, N_e: float) -> float:
        inner = self.solve_inner(N_e)
        value = 2.0 * self.rates.kappa * inner.n \
            - self.rates.gamma_par * (self.P * (self.N0 - N_e) - N_e)
        self.evaluations[N_e] = value
        return value

    def check_monotonic(self) -> None:
        """F doit croître avec N_e sur toutes les évaluations effectuées."""
        ordered = sorted(self.evaluations.items())
        slack = self.config.ne_tol * self.rates.gamma_par * self.N0
        for (x0, f0), (x1, f1) in zip(ordered, ordered[1:]):
            if f1 < f0 - slack:
                raise InternalSolverError(
                    f"F(N_e) non monotone: F({x0:.12g}) = {f0:.6g} > F({x1:.12g}) = {f1:.6g}"
                )


def _stable_value(balance: _EnergyBalance, N_e: float) -> Tuple[bool, float, Optional[LedSimulationError]]:
    try:
        return True, balance(N_e), None
    except UNSTABLE_ERRORS as error:
        logger.debug(f"Point instable pendant la recherche du crochet: N_e = {N_e:.12g} ({error})")
        return False, math.nan, error


def _find_bracket(balance: _EnergyBalance, upper: float) -> Tuple[float, float]:
    """
    Retourne [a, b] avec F(a) ≤ 0 < F(b), tous deux stables.

    Si la borne supérieure est instable (seuil effectif franchi), elle est
    rapprochée par bisection sur le critère « stable et F ≤ 0 ».
    """
    F_low = balance(0.0)
    if F_low > 0.0:
        raise NoRoot(f"F(0) = {F_low:.6g} > 0: aucun changement de signe")

    stable, F_high, error = _stable_value(balance, upper)
    if stable:
        if F_high <= 0.0:
            raise NoRoot(f"F({upper:.12g}) = {F_high:.6g} ≤ 0 à la borne sans champ")
        return 0.0, upper

    low, high = 0.0, upper
    last_error = error
    for _ in range(balance.config.max_outer_iters):
        middle = 0.5 * (low + high)
        stable, value, error = _stable_value(balance, middle)
        if not stable:
            high, last_error = middle, error
        elif value <= 0.0:
            low = middle
        else:
            return low, middle
        if high - low <= balance.config.ne_tol * max(balance.N0, 1):
            break

    margin = getattr(last_error, "margin", 0.0)
    raise StabilityViolation(high, margin)


def _diagnostics(balance: _EnergyBalance, inner: _InnerResult) -> Diagnostics:
    rates, config, P = balance.rates, balance.config, balance.P
    state = inner.state
    diagnostics = Diagnostics(inner_iterations=inner.iterations)

    diagnostics.stability_margin = relative_stability_margin(rates, state)
    diagnostics.residual = abs(
        2.0 * rates.kappa * inner.n - rates.gamma_par * (P * state.N_g - state.N_e)
    ) / (rates.gamma_par * balance.N0)
    diagnostics.quad_deviation = inner.integration.deviation

    ratio, passed = narrowness_check(rates, pf_bandwidth(inner.n, P, rates), config.narrowness_threshold)
    diagnostics.narrowness_ratio = ratio
    if not passed:
        diagnostics.warnings.append("narrowness")
        logger.warning(f"Approximation des PF étroites douteuse: Γ_N/min(κ, γ⊥/2) = {ratio:.3g} (P = {P:g})")

    delta2_zero_field = pf_dispersion(state.N_e, 0.0, P, rates, balance.N0, balance.pf_model)
    ratio, passed, issues = field_dispersion_check(
        state.N_e, state.delta2_Ne - delta2_zero_field, config.field_dispersion_limit
    )
    diagnostics.field_dispersion_ratio = ratio
    if not passed:
        if config.field_dispersion_policy == "abort":
            raise PFValidityError(issues[0]["message"])
        diagnostics.warnings.append("pf_field_dispersion")
        logger.warning(f"{issues[0]['message']} (P = {P:g})")

    if diagnostics.quad_deviation is not None and diagnostics.quad_deviation > config.cross_check_tol:
        diagnostics.warnings.append("quad_deviation")

    return diagnostics


def solve_operating_point(
    P: float,
    params: DeviceParams,
    variant: SpectrumVariant,
    pf_model: Optional[PFModel] = None,
    config: Optional[SolverConfig] = None
) -> OperatingPoint:
    """
    Résout la loi de conservation de l'énergie pour N_e ∈ [0, P·N0/(P+1)].

    Args:
        P: Pompe normalisée (≥ 0)
        params: Paramètres du dispositif
        variant: Traitement des fluctuations dans le spectre
        pf_model: Modèle de dispersion (binomial par défaut)
        config: Réglages du solveur

    Returns:
        Point de fonctionnement avec ses diagnostics

    Raises:
        StabilityViolation: N_e = 0 instable, ou aucun point stable avec F > 0
        NoRoot: Pas de changement de signe de F
        FixedPointDivergence: Boucle interne non convergée
        InternalSolverError: F non monotone ou bilan non satisfait après résolution
    """
    if not (math.isfinite(P) and P >= 0.0):
        raise ValueError(f"Pompe invalide: {P}")
    pf_model = pf_model or PFModel()
    config = config or SolverConfig()
    variant = SpectrumVariant(variant)
    rates = derive_rates(params)
    N0 = rates.N0

    balance = _EnergyBalance(P, rates, variant, pf_model, config)
    # Borne sans champ, limitée strictement en dessous du seuil semi-classique N = N_th
    threshold_N_e = 0.5 * (N0 + rates.N_th)
    upper = min(P * N0 / (P + 1.0), threshold_N_e * (1.0 - THRESHOLD_GUARD))

    if upper <= 0.0:
        root = 0.0
        balance(root)
    else:
        low, high = _find_bracket(balance, upper)
        logger.debug(f"P = {P:g}: crochet [{low:.12g}, {high:.12g}]")
        root = optimize.brentq(
            balance, low, high,
            xtol=1e-15 * N0, rtol=4.0 * np.finfo(float).eps,
            maxiter=config.max_outer_iters
        )
        balance(root)
        balance.check_monotonic()

    inner = balance.solve_inner(root)
    diagnostics = _diagnostics(balance, inner)
    if diagnostics.residual > config.ne_tol:
        raise InternalSolverError(
            f"Bilan d'énergie non satisfait à P = {P:g}: résidu relatif {diagnostics.residual:.3g}"
        )

    state = inner.state
    logger.debug(
        f"P = {P:g} ({variant.value}): N_e = {state.N_e:.12g}, n = {inner.n:.12g}, "
        f"résidu {diagnostics.residual:.3g}"
    )
    return OperatingPoint(
        P=P,
        N_e=state.N_e,
        N_g=state.N_g,
        N=state.N,
        delta2_Ne=state.delta2_Ne,
        n=inner.n,
        p_out=2.0 * rates.kappa * inner.n,
        variant=variant,
        diagnostics=diagnostics
    )


def _map_ordered(function: Callable[[Any], Any], items: Sequence[Any], workers: int) -> List[Any]:
    """map dans l'ordre des entrées, en parallèle si workers > 1."""
    if workers <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(function, items))


def solve_pump_curve(
    P_grid: Sequence[float],
    params: DeviceParams,
    variant: SpectrumVariant,
    pf_model: Optional[PFModel] = None,
    config: Optional[SolverConfig] = None,
    workers: int = 1
) -> Tuple[List[Optional[OperatingPoint]], List[Dict[str, Any]]]:
    """
    Résout une courbe p_out(P); une erreur sur un point n'interrompt pas la courbe.

    Args:
        P_grid: Pompes à résoudre
        params: Paramètres du dispositif
        variant: Traitement des fluctuations
        pf_model: Modèle de dispersion
        config: Réglages du solveur
        workers: Nombre de threads

    Returns:
        Tuple contenant:
        - La liste des points (None pour un point en échec), dans l'ordre de P_grid
        - La liste des erreurs rencontrées
    """
    def solve(P: float) -> Tuple[Optional[OperatingPoint], Optional[Dict[str, Any]]]:
        try:
            return solve_operating_point(P, params, variant, pf_model, config), None
        except Exception as error:
            logger.error(f"Échec de la résolution à P = {P:g} ({SpectrumVariant(variant).value}): {error}")
            return None, {
                "type": type(error).__name__,
                "severity": "error",
                "P": P,
                "message": str(error)
            }

    results = _map_ordered(solve, list(P_grid), workers)
    points = [point for point, _ in results]
    errors = [error for _, error in results if error is not None]
    return points, errors
