"""
Real-root isolation by Sturm sequences with exact rational endpoints.

The number of distinct roots of a squarefree p in (a, b] equals V(a) - V(b),
where V counts sign changes of the Sturm sequence with zeros dropped. The
count stays valid when an endpoint is itself a root, so bisection points
never need to avoid roots.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from monofock.logging import InvalidInputError, NumericalResolutionError, StructuralViolationError, logger
from monofock.poly.intpoly import IntPoly


@dataclass(frozen=True)
class RootInterval:
    poly: IntPoly
    lo: Fraction
    hi: Fraction
    sign_change: int

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def overlaps(self, other: "RootInterval") -> bool:
        return self.lo < other.hi and other.lo < self.hi


def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    """Canonical Sturm chain of p, each member rescaled to a primitive integer polynomial."""
    return [IntPoly.rescaled(s) for s in p.sympy.sturm()]


def sign_variations(chain: list[IntPoly], x: Fraction) -> int:
    signs = [s for s in (q.sign_at(x) for q in chain) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def cauchy_bound(p: IntPoly) -> Fraction:
    """A power of two strictly exceeding the modulus of every root."""
    lead = abs(p.leading)
    ratio = max(abs(c) for c in p.coefficients[:-1]) // lead if p.degree > 0 else 0
    return Fraction(2 ** (ratio + 2).bit_length())


def _require_squarefree(p: IntPoly) -> None:
    if p.is_zero:
        raise InvalidInputError("Cannot isolate the roots of the zero polynomial")
    if not p.is_squarefree():
        raise StructuralViolationError(
            f"Polynomial of degree {p.degree} is not squarefree",
            details={"degree": p.degree},
        )


def _tighten_lo(p: IntPoly, chain: list[IntPoly], lo: Fraction, hi: Fraction) -> Fraction:
    # (lo, hi] holds one root and lo is a root of something else; move lo right
    step = (hi - lo) / 2
    while True:
        candidate = lo + step
        if p.sign_at(candidate) != 0 and sign_variations(chain, candidate) - sign_variations(chain, hi) == 1:
            return candidate
        step /= 2


def isolate_real_roots(
    p: IntPoly,
    lower: Optional[Fraction] = None,
    upper: Optional[Fraction] = None,
) -> list[RootInterval]:
    """Disjoint isolating intervals (lo, hi] for the real roots of p in (lower, upper], ascending."""
    _require_squarefree(p)
    if p.degree == 0:
        return []
    bound = cauchy_bound(p)
    lo = -bound if lower is None else Fraction(lower)
    hi = bound if upper is None else Fraction(upper)
    chain = sturm_sequence(p)

    found: list[RootInterval] = []
    stack = [(lo, hi, sign_variations(chain, lo) - sign_variations(chain, hi))]
    while stack:
        a, b, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            if p.sign_at(a) == 0:
                a = _tighten_lo(p, chain, a, b)
            found.append(RootInterval(p, a, b, p.sign_at(a)))
            continue
        mid = (a + b) / 2
        left = sign_variations(chain, a) - sign_variations(chain, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, count - left))

    found.sort(key=lambda r: r.lo)
    logger.debug(f"Isolated {len(found)} real roots of a degree-{p.degree} polynomial")
    return found


def positive_roots(p: IntPoly) -> list[RootInterval]:
    return isolate_real_roots(p, lower=Fraction(0))


def count_real_roots(p: IntPoly) -> int:
    _require_squarefree(p)
    chain = sturm_sequence(p)
    bound = cauchy_bound(p)
    return sign_variations(chain, -bound) - sign_variations(chain, bound)


def bisect(ri: RootInterval) -> RootInterval:
    """One sign-based halving step; an exact root collapses the interval onto itself."""
    p = ri.poly
    if p.sign_at(ri.hi) == 0:
        return RootInterval(p, ri.hi, ri.hi, ri.sign_change)
    mid = ri.midpoint
    s = p.sign_at(mid)
    if s == 0:
        return RootInterval(p, mid, mid, ri.sign_change)
    if s == ri.sign_change:
        return RootInterval(p, mid, ri.hi, ri.sign_change)
    return RootInterval(p, ri.lo, mid, ri.sign_change)


def refine_interval(ri: RootInterval, width: Fraction) -> RootInterval:
    if ri.sign_change == 0:
        raise NumericalResolutionError("Isolating interval has a root at its open end")
    while ri.width >= width and ri.width > 0:
        ri = bisect(ri)
    return ri


def refine_root(ri: RootInterval, bits: int) -> Fraction:
    """Midpoint of the isolating interval after halving below width 2^-bits."""
    return refine_interval(ri, Fraction(1, 2**bits)).midpoint


def separate(a: RootInterval, b: RootInterval) -> tuple[RootInterval, RootInterval]:
    """Refine two intervals of different polynomials until they are disjoint."""
    while a.overlaps(b):
        if a.width >= b.width:
            a = bisect(a)
        else:
            b = bisect(b)
    if a.width == 0 and b.width == 0 and a.lo == b.lo:
        raise StructuralViolationError("Two polynomials share a root", details={"root": str(a.lo)})
    return a, b


def to_mpf(x: Fraction):
    """mpmath value of a rational, under the caller's working precision."""
    return mpmath.mpf(x.numerator) / x.denominator
