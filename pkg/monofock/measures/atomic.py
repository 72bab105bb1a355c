"""
Finitely supported probability measures and their Cauchy transforms.

Atoms and weights are numpy arrays: float64 when ``precision_bits == 53``,
otherwise object arrays of ``mpmath.mpf`` carried at ``precision_bits``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log10
from typing import Iterable, Sequence

import mpmath
import numpy as np
from sympy import QQ, Poly

from monofock.logging import (
    InvalidInputError,
    NumericalResolutionError,
    PoleError,
    PrecisionExhaustedError,
    VanishingTransformError,
    logger,
)
from monofock.poly.intpoly import IntPoly, t
from monofock.poly.sturm import isolate_real_roots, refine_root, to_mpf

FLOAT_BITS = 53


def uses_float(bits: int) -> bool:
    return bits == FLOAT_BITS


def collision_tolerance(bits: int) -> float:
    """Smallest admissible gap between neighbouring atoms."""
    return 0.0 if uses_float(bits) else float(mpmath.ldexp(1, -(bits - 16)))


def mass_tolerance(bits: int) -> float:
    return 2.0 ** (8 - bits)


def decimal_digits(bits: int) -> int:
    """Significant decimal digits carried by a `bits`-bit mantissa."""
    return ceil(bits * log10(2))


def decimal_string(x, bits: int) -> str:
    with mpmath.workprec(bits):
        return mpmath.nstr(mpmath.mpf(x), decimal_digits(bits))


def pack(values: Iterable, bits: int) -> np.ndarray:
    if uses_float(bits):
        return np.asarray([float(v) for v in values], dtype=np.float64)
    with mpmath.workprec(bits):
        return np.array([mpmath.mpf(v) for v in values], dtype=object)


@dataclass(frozen=True, eq=False)
class AtomicMeasure:
    atoms: np.ndarray
    weights: np.ndarray
    precision_bits: int = FLOAT_BITS
    label: str = ""

    def __post_init__(self):
        if len(self.atoms) == 0:
            raise InvalidInputError("An atomic measure needs at least one atom")
        if len(self.atoms) != len(self.weights):
            raise InvalidInputError(
                "Atoms and weights differ in length",
                details={"atoms": len(self.atoms), "weights": len(self.weights)},
            )
        if not np.all(self.weights > 0):
            raise InvalidInputError("Weights must be strictly positive")
        with mpmath.workprec(self.precision_bits):
            gaps = np.diff(self.atoms)
            if len(gaps) and not np.all(gaps > collision_tolerance(self.precision_bits)):
                raise PrecisionExhaustedError(
                    f"Atoms collide at {self.precision_bits} bits",
                    details={"label": self.label, "min_gap": float(np.min(gaps))},
                )
            excess = abs(float(self.total_mass()) - 1.0)
        if excess > mass_tolerance(self.precision_bits):
            raise InvalidInputError(
                f"Weights sum to 1{excess:+.3e}",
                details={"label": self.label, "excess": excess},
            )

    @classmethod
    def from_points(
        cls,
        atoms: Sequence,
        weights: Sequence,
        precision_bits: int = FLOAT_BITS,
        label: str = "",
    ) -> "AtomicMeasure":
        """Sort atoms ascending, carrying weights along."""
        order = sorted(range(len(atoms)), key=lambda k: atoms[k])
        return cls(
            pack((atoms[k] for k in order), precision_bits),
            pack((weights[k] for k in order), precision_bits),
            precision_bits,
            label,
        )

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def atoms_float(self) -> np.ndarray:
        return np.asarray(self.atoms, dtype=np.float64)

    @property
    def weights_float(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=np.float64)

    @property
    def max_atom(self):
        return self.atoms[-1]

    def total_mass(self):
        if uses_float(self.precision_bits):
            return float(np.sum(self.weights))
        with mpmath.workprec(self.precision_bits):
            return mpmath.fsum(self.weights)

    def is_symmetric(self, tol: float = 0.0) -> bool:
        """Atoms and weights invariant under x -> -x."""
        tol = tol or max(collision_tolerance(self.precision_bits), 1e-15)
        with mpmath.workprec(self.precision_bits):
            atom_gap = np.max(np.abs(self.atoms + self.atoms[::-1]))
            weight_gap = np.max(np.abs(self.weights - self.weights[::-1]))
        return float(atom_gap) <= tol and float(weight_gap) <= tol

    def with_precision(self, bits: int) -> "AtomicMeasure":
        return AtomicMeasure(pack(self.atoms, bits), pack(self.weights, bits), bits, self.label)

    def relabel(self, label: str) -> "AtomicMeasure":
        return AtomicMeasure(self.atoms, self.weights, self.precision_bits, label)

    def to_dump(self, full_precision: bool = False) -> dict:
        """float64 values, or decimal strings at the working precision."""
        if full_precision:
            atoms = [decimal_string(r, self.precision_bits) for r in self.atoms]
            weights = [decimal_string(w, self.precision_bits) for w in self.weights]
        else:
            atoms, weights = self.atoms_float.tolist(), self.weights_float.tolist()
        return {
            "atoms": atoms,
            "weights": weights,
            "precision_bits": self.precision_bits,
            "label": self.label,
        }


def point_mass(x=0, precision_bits: int = FLOAT_BITS) -> AtomicMeasure:
    return AtomicMeasure(pack([x], precision_bits), pack([1], precision_bits), precision_bits, f"delta_{x}")


def bernoulli(precision_bits: int = FLOAT_BITS) -> AtomicMeasure:
    """The symmetric Bernoulli law (delta_1 + delta_-1) / 2."""
    with mpmath.workprec(max(precision_bits, FLOAT_BITS)):
        half = mpmath.mpf(1) / 2
    return AtomicMeasure(pack([-1, 1], precision_bits), pack([half, half], precision_bits), precision_bits, "mu_1")


def is_point_mass_at_zero(mu: AtomicMeasure) -> bool:
    return len(mu) == 1 and mu.atoms[0] == 0


def is_bernoulli(mu: AtomicMeasure) -> bool:
    return (
        len(mu) == 2
        and mu.atoms[0] == -1
        and mu.atoms[1] == 1
        and all(w * 2 == 1 for w in mu.weights)
    )


def _check_not_pole(mu: AtomicMeasure, z: complex) -> None:
    if complex(z).imag != 0:
        return
    x = complex(z).real
    nearest = float(np.min(np.abs(mu.atoms_float - x)))
    if nearest <= collision_tolerance(mu.precision_bits):
        raise PoleError(f"Cauchy transform has a pole at {x}", details={"z": x, "label": mu.label})


def cauchy_transform(mu: AtomicMeasure, z: complex) -> complex:
    """G(z) = sum_k w_k / (z - r_k)."""
    _check_not_pole(mu, z)
    if uses_float(mu.precision_bits):
        return complex(np.sum(mu.weights / (complex(z) - mu.atoms)))
    with mpmath.workprec(mu.precision_bits):
        zz = mpmath.mpc(z)
        return complex(mpmath.fsum(w / (zz - r) for r, w in zip(mu.atoms, mu.weights)))


def reciprocal_cauchy(mu: AtomicMeasure, z: complex) -> complex:
    g = cauchy_transform(mu, z)
    if g == 0:
        raise VanishingTransformError(f"Cauchy transform vanishes at {z}", details={"label": mu.label})
    return 1 / g


def moments(mu: AtomicMeasure, k: int) -> float:
    """sum_j w_j r_j^k."""
    if k < 0:
        raise InvalidInputError(f"Moment order must be >= 0, got {k}")
    if k == 0:
        return 1.0
    if uses_float(mu.precision_bits):
        return float(np.sum(mu.weights * mu.atoms**k))
    with mpmath.workprec(mu.precision_bits):
        return float(mpmath.fsum(w * r**k for r, w in zip(mu.atoms, mu.weights)))


def exact_value(x) -> Fraction:
    """The dyadic rational stored in a float or mpf."""
    if isinstance(x, (int, float, np.floating)):
        return Fraction(float(x)) if not isinstance(x, int) else Fraction(x)
    man, exp = mpmath.mpf(x).man_exp
    return Fraction(man) * Fraction(2) ** exp


def transform_polys(nu: AtomicMeasure) -> tuple[Poly, Poly]:
    """(D, N) over QQ with H_nu = D / N, D = prod (z - s_j), N = sum v_j prod_{l != j} (z - s_l)."""
    atoms = [exact_value(s) for s in nu.atoms]
    weights = [exact_value(v) for v in nu.weights]
    factors = [Poly([QQ(1), -QQ(s.numerator, s.denominator)], t, domain=QQ) for s in atoms]
    denominator = Poly([QQ(1)], t, domain=QQ)
    for f in factors:
        denominator = denominator * f
    numerator = Poly([QQ(0)], t, domain=QQ)
    for j, v in enumerate(weights):
        term = Poly([QQ(v.numerator, v.denominator)], t, domain=QQ)
        for l, f in enumerate(factors):
            if l != j:
                term = term * f
        numerator = numerator + term
    return denominator, numerator


def _mp_coefficients(p: Poly) -> list:
    return [mpmath.mpf(c.p) / c.q for c in p.all_coeffs()]


def monotone_convolve(mu: AtomicMeasure, nu: AtomicMeasure) -> AtomicMeasure:
    """
    The atomic measure rho with H_rho = H_mu o H_nu.

    Atoms solve H_nu(r) = a for each atom a of mu; the atom r inherits the
    weight w_a / H_nu'(r).
    """
    bits = max(mu.precision_bits, nu.precision_bits)
    label = f"({mu.label} |> {nu.label})"
    if is_point_mass_at_zero(nu):
        return mu.with_precision(bits).relabel(label)
    if is_bernoulli(nu):
        from monofock.measures.binomial import bernoulli_step

        return bernoulli_step(mu.with_precision(bits)).relabel(label)

    denominator, numerator = transform_polys(nu)
    d_prime, n_prime = denominator.diff(t), numerator.diff(t)
    atoms, weights = [], []
    with mpmath.workprec(bits + 32):
        dc, nc = _mp_coefficients(denominator), _mp_coefficients(numerator)
        dpc, npc = _mp_coefficients(d_prime), _mp_coefficients(n_prime)
        for a, w_a in zip(mu.atoms, mu.weights):
            ea = exact_value(a)
            level = IntPoly.rescaled(denominator - numerator.mul_ground(QQ(ea.numerator, ea.denominator)))
            roots = isolate_real_roots(level)
            if len(roots) != len(nu):
                raise NumericalResolutionError(
                    f"Expected {len(nu)} preimages of atom {float(a)}, found {len(roots)}",
                    details={"atom": float(a), "found": len(roots)},
                )
            for ri in roots:
                r = to_mpf(refine_root(ri, bits + 16))
                n_val = mpmath.polyval(nc, r)
                h_prime = (mpmath.polyval(dpc, r) * n_val - mpmath.polyval(dc, r) * mpmath.polyval(npc, r)) / n_val**2
                if h_prime <= 0:
                    raise NumericalResolutionError(f"Non-positive H' at {r}", details={"root": float(r)})
                atoms.append(r)
                weights.append(mpmath.mpf(w_a) / h_prime)
        rho = AtomicMeasure.from_points(atoms, weights, bits, label)
    logger.debug(f"Convolved {len(mu)} x {len(nu)} atoms into {len(rho)}")
    return rho
