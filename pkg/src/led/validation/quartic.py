"""
Factorisation du dénominateur quartique pair D(ω) = c2·ω⁴ + c1·ω² + c0.

Les racines sont obtenues comme valeurs propres de la matrice compagne
(numpy.polynomial), dans la variable réduite u = ω/Λ pour que les coefficients
soient d'ordre 1.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.polynomial import Polynomial


@dataclass(frozen=True)
class QuarticFactorization:
    """
    Attributes:
        scaled_roots: Les quatre racines complexes de D(Λu)/(c2·Λ⁴) en u
        leading: Coefficient dominant c2 de D en ω
        scale: Échelle Λ (rad/s)
        even_coefficients: (c0, c1, c2), coefficients de D en x = ω²
    """
    scaled_roots: np.ndarray
    leading: float
    scale: float
    even_coefficients: tuple

    @property
    def roots(self) -> np.ndarray:
        """Racines en ω (rad/s)."""
        return self.scale * self.scaled_roots

    @property
    def scaled_polynomial(self) -> Polynomial:
        """Polynôme unitaire d(u) = u⁴ + (c1/c2Λ²)u² + c0/(c2Λ⁴)."""
        c0, c1, c2 = self.even_coefficients
        lam2 = self.scale ** 2
        return Polynomial([c0 / (c2 * lam2 * lam2), 0.0, c1 / (c2 * lam2), 0.0, 1.0])

    def upper_half_plane_roots(self) -> np.ndarray:
        """Racines réduites de partie imaginaire strictement positive."""
        return self.scaled_roots[self.scaled_roots.imag > 0.0]

    def has_real_roots(self, tolerance: float = 1e-12) -> bool:
        return bool(np.any(np.abs(self.scaled_roots.imag) <= tolerance * np.maximum(np.abs(self.scaled_roots), 1.0)))

    def min_relative_separation(self) -> float:
        """Plus petite distance entre deux racines réduites (|racine| ~ 1)."""
        roots = self.scaled_roots
        distances = [
            abs(roots[i] - roots[j])
            for i in range(len(roots))
            for j in range(i + 1, len(roots))
        ]
        return float(min(distances))

    def residual(self) -> float:
        """max |D(racine)| en unités de ω, pour le contrôle de précision."""
        c0, c1, c2 = self.even_coefficients
        x = np.square(self.roots)
        return float(np.max(np.abs(c2 * x * x + c1 * x + c0)))


def factor_quartic(even_coefficients: Sequence[float]) -> QuarticFactorization:
    """
    Factorise D(ω) = c2·ω⁴ + c1·ω² + c0.

    Args:
        even_coefficients: (c0, c1, c2), puissances croissantes de x = ω²

    Returns:
        Factorisation (racines réduites, coefficient dominant, échelle)

    Raises:
        ValueError: Coefficient dominant nul ou polynôme ω⁴
    """
    c0, c1, c2 = (float(value) for value in even_coefficients)
    if c2 == 0.0:
        raise ValueError("Coefficient dominant nul: D n'est pas quartique")

    scale = max(abs(c0 / c2) ** 0.25, abs(c1 / c2) ** 0.5)
    if scale == 0.0:
        raise ValueError("D(ω) = c2·ω⁴: racine quadruple en 0")

    lam2 = scale * scale
    reduced = Polynomial([c0 / (c2 * lam2 * lam2), 0.0, c1 / (c2 * lam2), 0.0, 1.0])
    roots = np.sort_complex(reduced.roots().astype(complex))

    return QuarticFactorization(
        scaled_roots=roots,
        leading=c2,
        scale=scale,
        even_coefficients=(c0, c1, c2)
    )
