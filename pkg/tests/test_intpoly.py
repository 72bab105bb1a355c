from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import QQ, Poly, Rational

from monofock.logging import InvalidInputError, StructuralViolationError
from monofock.poly.intpoly import ONE, T, T2, IntPoly, t

small_coefficients = st.lists(st.integers(min_value=-20, max_value=20), min_size=1, max_size=7)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=30)


def test_coefficients_are_ascending():
    p = IntPoly.from_coefficients([1, 0, -3, 0, 1])
    assert p.degree == 4
    assert p.coefficients == (1, 0, -3, 0, 1)
    assert p.leading == 1
    assert p.coefficient(2) == -3
    assert p.coefficient(9) == 0


def test_zero_polynomial():
    zero = IntPoly.from_coefficients([])
    assert zero.is_zero
    assert zero.coefficients == ()
    assert zero.evaluate(3) == 0


def test_arithmetic():
    p = ONE - T2
    assert (p * p).coefficients == (1, 0, -2, 0, 1)
    assert (p**2) == p * p
    assert (T * 3 + ONE).coefficients == (1, 3)
    assert (3 * T).coefficients == (0, 3)
    assert (-p).coefficients == (-1, 0, 1)
    assert p.derivative().coefficients == (0, -2)


def test_non_integer_coefficients_rejected():
    with pytest.raises(InvalidInputError):
        IntPoly(Poly(t / 2, t, domain=QQ))
    with pytest.raises(InvalidInputError):
        ONE + 0.5


def test_rescaled_clears_denominators():
    p = IntPoly.rescaled(Poly(t / 2 - QQ(1, 3), t, domain=QQ))
    assert p.coefficients == (-2, 3)


def test_evaluate_and_sign():
    p = T2 - ONE
    assert p.evaluate(Fraction(1, 2)) == Fraction(-3, 4)
    assert p.sign_at(Fraction(1, 2)) == -1
    assert p.sign_at(1) == 0
    assert p.sign_at(Fraction(-7, 3)) == 1


def test_reversal_square_substitution_and_parity():
    p = IntPoly.from_coefficients([1, 2, 3])
    assert p.reversed().coefficients == (3, 2, 1)
    assert p.substitute_square().coefficients == (1, 0, 2, 0, 3)
    assert p.substitute_square().is_even()
    assert not p.is_even()


def test_exact_quotient():
    p = ONE - T2
    assert (p * (ONE + T)).exact_quotient(p) == ONE + T
    with pytest.raises(StructuralViolationError):
        (T2 + ONE).exact_quotient(T + ONE)


def test_gcd_and_squarefree():
    p = ONE - T2
    assert p.gcd(ONE - T).coefficients in {(1, -1), (-1, 1)}
    assert p.is_squarefree()
    assert not (p * p).is_squarefree()


@given(small_coefficients, small_coefficients, rationals)
@settings(max_examples=60, deadline=None)
def test_evaluation_is_multiplicative(a, b, x):
    p, q = IntPoly.from_coefficients(a), IntPoly.from_coefficients(b)
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


@given(small_coefficients, rationals)
@settings(max_examples=60, deadline=None)
def test_evaluation_matches_sympy(a, x):
    p = IntPoly.from_coefficients(a)
    assert p.evaluate(x) == Fraction(str(p.sympy.eval(Rational(x.numerator, x.denominator))))
