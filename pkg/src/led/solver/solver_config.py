"""
Réglages numériques du solveur (sections 'solver' et 'pf' de la configuration).
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict

from src.led.errors import ParameterValidationError

QUAD_BACKENDS = ("residue", "adaptive", "both")
FIELD_DISPERSION_POLICIES = ("warn", "abort")


@dataclass(frozen=True)
class SolverConfig:
    """
    Attributes:
        ne_tol: Tolérance relative sur N_e et sur le bilan d'énergie (rapporté à γ∥N0)
        quad_rel_tol: Tolérance relative de la quadrature adaptive
        max_outer_iters: Nombre maximal d'itérations (point fixe interne et recherche de racine)
        damping: Facteur d'amortissement du point fixe n ↔ δ²N_e
        quad_backend: residue, adaptive ou both (comparaison des deux)
        quad_window_factor: Fenêtre finie de la quadrature, en unités de l'échelle spectrale
        quad_limit: Nombre maximal de sous-intervalles de la quadrature
        cross_check_tol: Écart relatif toléré entre les deux méthodes (backend both)
        narrowness_threshold: Seuil du rapport Γ_N/min(κ, γ⊥/2)
        field_dispersion_limit: Seuil du rapport sqrt(δ²N_e_f)/N_e
        field_dispersion_policy: warn (avertissement) ou abort (PFValidityError)
    """
    ne_tol: float = 1e-10
    quad_rel_tol: float = 1e-9
    max_outer_iters: int = 200
    damping: float = 0.5
    quad_backend: str = "residue"
    quad_window_factor: float = 20.0
    quad_limit: int = 200
    cross_check_tol: float = 1e-8
    narrowness_threshold: float = 0.1
    field_dispersion_limit: float = 0.1
    field_dispersion_policy: str = "warn"

    def __post_init__(self):
        for name in ("ne_tol", "quad_rel_tol", "quad_window_factor", "cross_check_tol",
                     "narrowness_threshold", "field_dispersion_limit"):
            if not getattr(self, name) > 0:
                raise ParameterValidationError(name, "doit être strictement positif")
        if self.max_outer_iters < 1:
            raise ParameterValidationError("max_outer_iters", "doit être ≥ 1")
        if self.quad_limit < 1:
            raise ParameterValidationError("quad_limit", "doit être ≥ 1")
        if not 0 < self.damping <= 1:
            raise ParameterValidationError("damping", "doit vérifier 0 < damping ≤ 1")
        if self.quad_backend not in QUAD_BACKENDS:
            raise ParameterValidationError("quad_backend", f"attendu parmi {QUAD_BACKENDS}")
        if self.field_dispersion_policy not in FIELD_DISPERSION_POLICIES:
            raise ParameterValidationError(
                "field_dispersion_policy", f"attendu parmi {FIELD_DISPERSION_POLICIES}"
            )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
