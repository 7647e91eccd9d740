"""
Presets reproduisant les figures: courbes p_out(P), R(P), spectres à P fixé et
comparaisons des quatre traitements des fluctuations de population.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.led.errors import ConfigError
from src.led.params.build_device_params import exchange_rates
from src.led.params.device_params import DeviceParams
from src.led.spectra.medium_state import SpectrumVariant

BUNDLE_NON_SR = "non-sr"
BUNDLE_SR = "sr"

KIND_PUMP = "pump"
KIND_SPECTRUM = "spectrum"

# Paires (n_c, N0): N0 = 100 sauf pour la courbe la plus haute (n_c = 2, N0 = 200)
FIGURE_CURVES: Tuple[Tuple[float, int], ...] = (
    (100.0, 100),
    (50.0, 100),
    (10.0, 100),
    (5.0, 100),
    (2.0, 100),
    (2.0, 200)
)
COMPARISON_CURVES: Tuple[Tuple[float, int], ...] = ((2.0, 200),)

PF_COMPARISON = (SpectrumVariant.NON_PERTURBATIVE, SpectrumVariant.ZERO_ORDER)
ALL_VARIANTS = (
    SpectrumVariant.ZERO_ORDER,
    SpectrumVariant.SPONTANEOUS_ONLY,
    SpectrumVariant.PERTURBATIVE,
    SpectrumVariant.NON_PERTURBATIVE
)


@dataclass(frozen=True)
class Preset:
    """
    Attributes:
        name: Nom du preset
        description: Contenu de la figure
        bundle: non-sr (2κ/γ⊥ = 0.05) ou sr (2κ ↔ γ⊥ échangés, 2κ/γ⊥ = 20)
        kind: pump (courbes en P) ou spectrum (spectres à P fixé)
        curves: Paires (n_c, N0)
        variants: Traitements comparés
        with_enhancement: Écrit aussi la table R(P)
    """
    name: str
    description: str
    bundle: str
    kind: str
    curves: Tuple[Tuple[float, int], ...]
    variants: Tuple[SpectrumVariant, ...]
    with_enhancement: bool = False

    def device_for(self, base: DeviceParams, n_c: float, N0: int) -> DeviceParams:
        """Paramètres d'une courbe: base non-SR, n_c et N0 imposés, échange pour le bundle SR."""
        params = DeviceParams(**{**base.to_dict(), "n_c": n_c, "N0": N0})
        return exchange_rates(params) if self.bundle == BUNDLE_SR else params


def curve_name(n_c: float, N0: int) -> str:
    """Identifiant de courbe 'nc<n_c>_N<N0>' (n_c sans décimale inutile)."""
    return f"nc{n_c:g}_N{N0}"


PRESETS: Dict[str, Preset] = {
    "fig2": Preset("fig2", "p_out(P) et R(P), LED non superradiante", BUNDLE_NON_SR,
                   KIND_PUMP, FIGURE_CURVES, PF_COMPARISON, with_enhancement=True),
    "fig3": Preset("fig3", "Spectres p_out(ω) à P = 1, LED non superradiante", BUNDLE_NON_SR,
                   KIND_SPECTRUM, FIGURE_CURVES, PF_COMPARISON),
    "fig4a": Preset("fig4a", "p_out(P) des quatre traitements, non superradiante, n_c = 2, N0 = 200",
                    BUNDLE_NON_SR, KIND_PUMP, COMPARISON_CURVES, ALL_VARIANTS),
    "fig4b": Preset("fig4b", "Spectres des quatre traitements à P = 1, non superradiante",
                    BUNDLE_NON_SR, KIND_SPECTRUM, COMPARISON_CURVES, ALL_VARIANTS),
    "fig5": Preset("fig5", "p_out(P) et R(P), LED superradiante", BUNDLE_SR,
                   KIND_PUMP, FIGURE_CURVES, PF_COMPARISON, with_enhancement=True),
    "fig6": Preset("fig6", "Spectres p_out(ω) à P = 1, LED superradiante", BUNDLE_SR,
                   KIND_SPECTRUM, FIGURE_CURVES, PF_COMPARISON),
    "fig7a": Preset("fig7a", "p_out(P) des quatre traitements, superradiante, n_c = 2, N0 = 200",
                    BUNDLE_SR, KIND_PUMP, COMPARISON_CURVES, ALL_VARIANTS),
    "fig7b": Preset("fig7b", "Spectres des quatre traitements à P = 1, superradiante",
                    BUNDLE_SR, KIND_SPECTRUM, COMPARISON_CURVES, ALL_VARIANTS)
}


def get_preset(name: str) -> Preset:
    if name not in PRESETS:
        raise ConfigError(f"Preset inconnu: '{name}' (disponibles: {', '.join(PRESETS)})")
    return PRESETS[name]


def list_presets() -> List[Preset]:
    return list(PRESETS.values())
