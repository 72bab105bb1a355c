"""
Monotone binomial laws mu_n, the vacuum laws of S_n = s_1 + ... + s_n.

mu_n = mu_{n-1} |> mu_1, so every atom a of mu_{n-1} splits into the two
solutions of (r^2 - 1) / r = a, and the child r carries w * r^2 / (1 + r^2).
"""

import time
from dataclasses import dataclass
from math import sqrt
from typing import Optional

import mpmath
import numpy as np

from monofock.core.config import settings
from monofock.logging import InvalidInputError, StructuralViolationError, check_cap, logger
from monofock.measures.arcsine import ArcsineLaw, kolmogorov_distance
from monofock.measures.atomic import FLOAT_BITS, AtomicMeasure, bernoulli, uses_float
from monofock.schemas import CltRow

# above this many trials atoms are generated in float64 only
MP_LIMIT_N = 20


@dataclass(frozen=True)
class BinomialLawRecord:
    n: int
    measure: AtomicMeasure
    max_atom: float
    bounds: tuple[float, float]

    def __post_init__(self):
        if len(self.measure) != 2**self.n:
            raise StructuralViolationError(f"mu_{self.n} has {len(self.measure)} atoms, expected {2**self.n}")
        lower, upper = self.bounds
        if not lower <= self.max_atom < upper:
            raise StructuralViolationError(
                f"Largest atom of mu_{self.n} escapes its bounds",
                details={"max_atom": self.max_atom, "lower": lower, "upper": upper},
            )


def children_atoms(a):
    """The two solutions (r_minus, r_plus) of (r^2 - 1) / r = a; their product is -1."""
    root = mpmath.sqrt(a * a + 4) if not isinstance(a, float) else sqrt(a * a + 4)
    if a >= 0:
        plus = (a + root) / 2
        return -1 / plus, plus
    minus = (a - root) / 2
    return minus, -1 / minus


def child_weight(w_parent, r_child):
    if r_child == 0:
        raise InvalidInputError("A child atom is never 0")
    return w_parent * r_child * r_child / (1 + r_child * r_child)


def _children_float(atoms: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    magnitude = (np.abs(atoms) + np.sqrt(atoms * atoms + 4)) / 2
    large = np.where(atoms >= 0, magnitude, -magnitude)
    small = -1 / large
    return np.minimum(large, small), np.maximum(large, small)


def bernoulli_step(mu: AtomicMeasure) -> AtomicMeasure:
    """mu |> mu_1 for an atomic mu with sorted atoms."""
    bits = mu.precision_bits
    if uses_float(bits):
        minus, plus = _children_float(mu.atoms)
        children = np.concatenate([minus, plus])
        parents = np.concatenate([mu.weights, mu.weights])
        squares = children * children
        weights = parents * squares / (1 + squares)
        return AtomicMeasure(children, weights, bits, mu.label)
    with mpmath.workprec(bits):
        pairs = [children_atoms(a) for a in mu.atoms]
        # minus children then plus children keeps the order ascending
        children = [p[0] for p in pairs] + [p[1] for p in pairs]
        parents = list(mu.weights) * 2
        weights = [child_weight(w, r) for w, r in zip(parents, children)]
        return AtomicMeasure(np.array(children, dtype=object), np.array(weights, dtype=object), bits, mu.label)


def working_bits(n: int, precision_bits: Optional[int] = None) -> int:
    bits = precision_bits or settings.precision_bits
    if n > MP_LIMIT_N and not uses_float(bits):
        logger.info(f"mu_{n}: {2**n} atoms, switching to float64")
        return FLOAT_BITS
    return bits


def endpoint_bounds(n: int) -> tuple[float, float]:
    """(sqrt(2n - sqrt(2n)), sqrt(2n)) sandwiching the largest atom of mu_n."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    return sqrt(2 * n - sqrt(2 * n)), sqrt(2 * n)


def max_atom(n: int, precision_bits: Optional[int] = None):
    """Largest atom of mu_n, following only the largest child."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    with mpmath.workprec(precision_bits or settings.precision_bits):
        a = mpmath.mpf(1)
        for _ in range(n - 1):
            a = (a + mpmath.sqrt(a * a + 4)) / 2
        return +a


def binomial_measure(n: int, precision_bits: Optional[int] = None) -> BinomialLawRecord:
    check_cap("n", n, settings.binomial_cap_n)
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    bits = working_bits(n, precision_bits)
    start = time.time()
    mu = bernoulli(bits)
    for _ in range(n - 1):
        mu = bernoulli_step(mu)
    mu = mu.relabel(f"mu_{n}")
    elapsed = time.time() - start
    if elapsed > 1:
        logger.info(f"[TIMING] mu_{n} at {bits} bits: {elapsed:.2f}s")
    return BinomialLawRecord(n, mu, float(mu.max_atom), endpoint_bounds(n))


def printed_weight_formula(k: int, atoms_n, atoms_prev, precision_bits: Optional[int] = None):
    """
    prod_h (r_k - r_h^(n-1)) / (2 prod_{h != k} (r_k - r_h^(n))), evaluated as printed.

    Kept for comparison with the residue weights. It is odd in r_k for a
    symmetric law, so it is negative at negative atoms and does not sum to 1.
    """
    if len(atoms_n) != 2 * len(atoms_prev) or len(atoms_prev) < 2:
        raise InvalidInputError("Expects 2^n atoms of mu_n and 2^(n-1) atoms of mu_(n-1), n >= 2")
    with mpmath.workprec(precision_bits or settings.precision_bits):
        r = mpmath.mpf(atoms_n[k])
        numerator = mpmath.fprod(r - mpmath.mpf(p) for p in atoms_prev)
        denominator = 2 * mpmath.fprod(r - mpmath.mpf(q) for h, q in enumerate(atoms_n) if h != k)
        if denominator == 0:
            raise InvalidInputError("Duplicate atoms in the printed weight formula")
        return numerator / denominator


def weight_formula_comparison(n: int, precision_bits: Optional[int] = None) -> dict:
    """Residue weights against the printed formula for mu_n, n >= 2."""
    current = binomial_measure(n, precision_bits).measure
    previous = binomial_measure(n - 1, precision_bits).measure
    printed = [printed_weight_formula(k, current.atoms, previous.atoms, precision_bits) for k in range(len(current))]
    printed_float = [float(w) for w in printed]
    residue = current.weights_float.tolist()
    return {
        "n": n,
        "residue_weights": residue,
        "printed_weights": printed_float,
        "printed_total": float(sum(printed_float)),
        "printed_abs_total": float(sum(abs(w) for w in printed_float)),
        "max_difference": max(abs(a - b) for a, b in zip(residue, printed_float)),
    }


def positive_atoms_by_inverse_pairs(n: int, precision_bits: Optional[int] = None) -> np.ndarray:
    """Positive atoms of mu_{n+1} as the plus-children of every atom of mu_n."""
    mu = binomial_measure(n, precision_bits).measure
    if uses_float(mu.precision_bits):
        return _children_float(mu.atoms)[1]
    with mpmath.workprec(mu.precision_bits):
        return np.array([children_atoms(a)[1] for a in mu.atoms], dtype=object)


def inverse_pairs_hold(mu: AtomicMeasure, tol: float = 1e-12) -> bool:
    """The positive atoms are closed under r -> 1/r."""
    positives = mu.atoms_float[mu.atoms_float > 0]
    return bool(np.max(np.abs(positives * positives[::-1] - 1)) <= tol)


def monotonicity_holds(n: int) -> bool:
    """(2/sqrt n - 1/sqrt(n+1)) M < sqrt((M^2 + 4)/(n+1)) with M the largest atom of mu_n."""
    with mpmath.workprec(settings.precision_bits):
        m = max_atom(n)
        lhs = (2 / mpmath.sqrt(n) - 1 / mpmath.sqrt(n + 1)) * m
        rhs = mpmath.sqrt((m * m + 4) / (n + 1))
        return bool(lhs < rhs)


def lower_bound_polynomial_positive(m: int) -> bool:
    """4m^4 + 12m^3 - 4m^2 - 24m + 1 >= 0, the auxiliary inequality behind the lower endpoint bound."""
    return 4 * m**4 + 12 * m**3 - 4 * m**2 - 24 * m + 1 >= 0


def clt_table(max_n: int) -> list[CltRow]:
    """Rows (n, largest atom, largest atom / sqrt n, Kolmogorov distance to arcsine at scale sqrt n)."""
    check_cap("max_n", max_n, settings.binomial_cap_n)
    if max_n < 1:
        raise InvalidInputError(f"max_n must be >= 1, got {max_n}")
    law = ArcsineLaw()
    rows: list[CltRow] = []
    mu = bernoulli(FLOAT_BITS)
    for n in range(1, max_n + 1):
        if n > 1:
            mu = bernoulli_step(mu)
        top = float(mu.max_atom)
        rows.append(
            CltRow(
                n=n,
                max_atom=top,
                ratio=top / sqrt(n),
                ks_distance=kolmogorov_distance(mu, law, sqrt(n)),
            )
        )
        logger.debug(f"CLT row n={n}: ratio={rows[-1].ratio:.12f}")
    return rows
