"""The arcsine law on (-sqrt 2, sqrt 2) and Kolmogorov distances to it."""

from math import comb, sqrt

import numpy as np
from scipy import integrate, stats

from monofock.logging import InvalidInputError
from monofock.measures.atomic import AtomicMeasure

EDGE = sqrt(2.0)


class ArcsineLaw:
    """Density 1 / (pi sqrt(2 - x^2)) on (-sqrt 2, sqrt 2)."""

    def __init__(self):
        self._law = stats.arcsine(loc=-EDGE, scale=2 * EDGE)

    def density(self, x):
        return self._law.pdf(x)

    def cdf(self, x):
        return self._law.cdf(np.clip(x, -EDGE, EDGE))

    def quantile(self, q):
        return self._law.ppf(q)

    def moment(self, k: int) -> float:
        """Odd moments vanish; even ones are C(2j, j) / 2^j."""
        if k % 2:
            return 0.0
        j = k // 2
        return comb(2 * j, j) / 2**j

    def total_mass(self) -> float:
        # algebraic endpoint weight (x + a)^(-1/2) (a - x)^(-1/2) absorbs the singularities
        mass, _ = integrate.quad(lambda x: 1 / np.pi, -EDGE, EDGE, weight="alg", wvar=(-0.5, -0.5))
        return mass

    def discretize(self, size: int) -> AtomicMeasure:
        """Equal weights at the midpoint quantiles (k - 1/2) / size."""
        if size < 1:
            raise InvalidInputError(f"Discretisation size must be >= 1, got {size}")
        q = (np.arange(size) + 0.5) / size
        return AtomicMeasure(self.quantile(q), np.full(size, 1.0 / size), label=f"arcsine[{size}]")


def kolmogorov_distance(mu: AtomicMeasure, law: ArcsineLaw, scale: float = 1.0) -> float:
    """
    sup_x |F_mu(scale x) - F_law(x)|.

    Between atoms F_mu is flat, so the supremum is attained at an atom or
    at its left limit.
    """
    if scale <= 0:
        raise InvalidInputError(f"Scale must be positive, got {scale}")
    x = mu.atoms_float / scale
    right = np.cumsum(mu.weights_float)
    left = right - mu.weights_float
    reference = law.cdf(x)
    return float(max(np.max(np.abs(right - reference)), np.max(np.abs(left - reference))))
