"""
Dense integer polynomials in one variable t.

Arithmetic is delegated to ``sympy.Poly`` over ZZ. Exact sign evaluation at
rational points uses homogenised Horner on Python ints, which is the hot loop
of root isolation.
"""

from fractions import Fraction
from typing import Iterable, Union

import mpmath
from sympy import ZZ, Poly, symbols

from monofock.logging import InvalidInputError, StructuralViolationError

t = symbols("t")

Scalar = Union[int, Fraction]


class IntPoly:
    __slots__ = ("_poly", "_coefficients")

    def __init__(self, poly: Poly):
        if poly.get_domain() != ZZ:
            if not all(c.is_integer for c in poly.all_coeffs()):
                raise InvalidInputError(f"Non-integer coefficients in {poly.as_expr()}")
            poly = poly.set_domain(ZZ)
        self._poly = poly
        self._coefficients = tuple(int(c) for c in reversed(poly.all_coeffs())) if not poly.is_zero else ()

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int]) -> "IntPoly":
        """Build from ascending coefficients (index = degree)."""
        values = [int(c) for c in coefficients]
        return cls(Poly(list(reversed(values)) or [0], t, domain=ZZ))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls.from_coefficients([c])

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPoly":
        return cls.from_coefficients([0] * degree + [c])

    @property
    def sympy(self) -> Poly:
        return self._poly

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Ascending coefficients; the zero polynomial is empty."""
        return self._coefficients

    @property
    def degree(self) -> int:
        return len(self._coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coefficients

    @property
    def leading(self) -> int:
        return self._coefficients[-1] if self._coefficients else 0

    def coefficient(self, k: int) -> int:
        return self._coefficients[k] if 0 <= k < len(self._coefficients) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(self._poly + _coerce(other))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(self._poly - _coerce(other))

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        return IntPoly(self._poly * _coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-self._poly)

    def __pow__(self, k: int) -> "IntPoly":
        return IntPoly(self._poly**k)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __repr__(self) -> str:
        return f"IntPoly({self._poly.as_expr()})"

    def derivative(self) -> "IntPoly":
        return IntPoly(self._poly.diff(t))

    @classmethod
    def rescaled(cls, poly: Poly) -> "IntPoly":
        """Primitive integer polynomial with the same roots and sign as a rational one."""
        return cls(_to_integer_poly(poly))

    def substitute_square(self) -> "IntPoly":
        """P(t^2)."""
        spread = []
        for c in self._coefficients:
            spread.extend((c, 0))
        return IntPoly.from_coefficients(spread)

    def reversed(self) -> "IntPoly":
        """t^deg P(1/t)."""
        return IntPoly.from_coefficients(reversed(self._coefficients))

    def is_even(self) -> bool:
        return all(c == 0 for c in self._coefficients[1::2])

    def gcd(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(self._poly.gcd(other._poly))

    def exact_quotient(self, other: "IntPoly") -> "IntPoly":
        quotient, remainder = self._poly.div(other._poly)
        if not remainder.is_zero:
            raise StructuralViolationError(f"{other} does not divide {self}")
        return IntPoly(quotient)

    def is_squarefree(self) -> bool:
        return self._poly.is_sqf

    def primitive(self) -> "IntPoly":
        _, prim = self._poly.primitive()
        return IntPoly(prim)

    def sign_at(self, x: Scalar) -> int:
        """Exact sign of P(x) for a rational x."""
        value = self.evaluate(x)
        return (value > 0) - (value < 0)

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact value at a rational point by homogenised Horner."""
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        acc = 0
        scale = 1
        for c in reversed(self._coefficients):
            acc = acc * p + c * scale
            scale *= q
        # acc = q^deg * P(p/q)
        return Fraction(acc, scale // q) if self._coefficients else Fraction(0)

    def evaluate_mp(self, x):
        """Value at an mpmath number under the caller's working precision."""
        return mpmath.polyval(list(reversed(self._coefficients)), x) if self._coefficients else mpmath.mpf(0)

    def to_dump(self, name: str = "") -> dict:
        return {
            "degree": self.degree,
            "coefficients": [str(c) for c in self._coefficients],
            "name": name,
        }


def _coerce(other: Union[IntPoly, int]) -> Poly:
    if isinstance(other, IntPoly):
        return other.sympy
    if isinstance(other, int):
        return Poly(other, t, domain=ZZ)
    raise InvalidInputError(f"Cannot combine IntPoly with {type(other).__name__}")


def _to_integer_poly(poly: Poly) -> Poly:
    """Positive rescaling of a rational polynomial to a primitive integer one."""
    _, cleared = poly.clear_denoms(convert=True)
    if cleared.is_zero:
        return Poly(0, t, domain=ZZ)
    _, prim = cleared.primitive()
    return prim.set_domain(ZZ)


ONE = IntPoly.constant(1)
T = IntPoly.monomial(1)
T2 = IntPoly.monomial(2)
