"""
Modèles de la dispersion des fluctuations de population δ²N_e.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict


class PFTag(str, Enum):
    BINOMIAL = "binomial"
    LANGEVIN_RATE = "langevin-rate"
    NONE = "none"


@dataclass(frozen=True)
class PFModel:
    """
    Modèle de dispersion sélectionné.

    Attributes:
        tag: binomial (défaut), langevin-rate ou none (δ²N_e ≡ 0)
        options: Coefficients propres au modèle (aucun n'est requis aujourd'hui)
    """
    tag: PFTag = PFTag.BINOMIAL
    options: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_name(cls, name: str) -> "PFModel":
        key = name.lower().replace("_", "").replace("-", "")
        for tag in PFTag:
            if tag.value.replace("-", "") == key:
                return cls(tag)
        valid = ", ".join(tag.value for tag in PFTag)
        raise ValueError(f"Modèle de PF inconnu: '{name}' (attendu: {valid})")

    @property
    def name(self) -> str:
        return self.tag.value
