from fractions import Fraction

import pytest

from monofock.core.config import settings
from monofock.logging import CapExceededError, InvalidInputError
from monofock.spectral.conjecture import (
    degree_bound,
    identity_polynomial,
    matches_mgf_denominator,
    verify_on_invariant_subspace,
    verify_on_truncation,
)


@pytest.mark.parametrize(
    "n,coefficients",
    [(1, (1,)), (2, (3, -1)), (3, (7, -13, 7, -1))],
)
def test_known_identity_polynomials(n, coefficients):
    result = identity_polynomial(n)
    assert result.coefficients == tuple(Fraction(c) for c in coefficients)
    assert result.within_conjectured_bound
    assert matches_mgf_denominator(result)


def test_degree_bound():
    assert [degree_bound(n) for n in range(1, 6)] == [1, 2, 4, 7, 11]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_identity_holds_on_every_column(n):
    result = identity_polynomial(n)
    assert verify_on_invariant_subspace(result)
    assert verify_on_truncation(result)


def test_degree_exceeds_bound_from_four():
    result = identity_polynomial(4)
    assert result.minimal_degree == 8
    assert result.degree_bound == 7
    assert not result.within_conjectured_bound
    assert matches_mgf_denominator(result)


def test_arguments_are_checked():
    with pytest.raises(InvalidInputError):
        identity_polynomial(0)
    with pytest.raises(CapExceededError):
        identity_polynomial(settings.identity_cap + 1)
