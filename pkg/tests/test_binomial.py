from math import sqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monofock.core.config import settings as app_settings
from monofock.logging import CapExceededError, InvalidInputError
from monofock.measures.atomic import FLOAT_BITS, is_bernoulli
from monofock.measures.binomial import (
    MP_LIMIT_N,
    binomial_measure,
    child_weight,
    children_atoms,
    clt_table,
    endpoint_bounds,
    inverse_pairs_hold,
    lower_bound_polynomial_positive,
    max_atom,
    monotonicity_holds,
    positive_atoms_by_inverse_pairs,
    printed_weight_formula,
    weight_formula_comparison,
    working_bits,
)

parent_atoms = st.floats(min_value=-50, max_value=50, allow_nan=False)


def test_first_law_is_bernoulli():
    record = binomial_measure(1)
    assert is_bernoulli(record.measure)
    assert record.max_atom == 1.0


def test_second_law(golden, mu2_weights):
    mu = binomial_measure(2).measure
    assert mu.atoms_float.tolist() == pytest.approx([-golden, -1 / golden, 1 / golden, golden], abs=1e-15)
    assert mu.weights_float.tolist() == pytest.approx(mu2_weights, abs=1e-15)


@pytest.mark.parametrize("n", range(1, 9))
def test_mass_symmetry_and_size(n):
    mu = binomial_measure(n).measure
    assert len(mu) == 2**n
    assert float(mu.total_mass()) == pytest.approx(1.0, abs=1e-15)
    assert mu.is_symmetric()
    assert inverse_pairs_hold(mu)


def test_float_and_high_precision_agree():
    fast = binomial_measure(6, FLOAT_BITS).measure
    exact = binomial_measure(6).measure
    assert np.max(np.abs(fast.atoms_float - exact.atoms_float)) < 1e-13
    assert np.max(np.abs(fast.weights_float - exact.weights_float)) < 1e-14


def test_arguments_are_checked():
    with pytest.raises(InvalidInputError):
        binomial_measure(0)
    with pytest.raises(CapExceededError):
        binomial_measure(app_settings.binomial_cap_n + 1)


def test_large_n_switches_to_float():
    assert working_bits(MP_LIMIT_N + 1) == FLOAT_BITS
    assert working_bits(MP_LIMIT_N) == app_settings.precision_bits
    assert working_bits(3, 128) == 128


@given(parent_atoms)
@settings(max_examples=80, deadline=None)
def test_children_solve_the_splitting_equation(a):
    minus, plus = children_atoms(a)
    assert minus < 0 < plus
    assert minus * plus == pytest.approx(-1)
    for r in (minus, plus):
        assert (r * r - 1) / r == pytest.approx(a, abs=1e-9)


@given(parent_atoms, st.floats(min_value=1e-6, max_value=1.0))
@settings(max_examples=80, deadline=None)
def test_children_conserve_weight(a, w):
    minus, plus = children_atoms(a)
    assert child_weight(w, minus) + child_weight(w, plus) == pytest.approx(w)


def test_child_weight_rejects_zero():
    with pytest.raises(InvalidInputError):
        child_weight(0.5, 0.0)


@pytest.mark.parametrize("n", range(1, 11))
def test_max_atom_matches_measure(n):
    assert float(max_atom(n)) == pytest.approx(binomial_measure(n).max_atom, abs=1e-14)


@pytest.mark.parametrize("n", range(1, 21))
def test_endpoint_sandwich(n):
    lower, upper = endpoint_bounds(n)
    assert lower <= float(max_atom(n)) < upper


def test_max_atom_of_second_law(golden):
    assert float(max_atom(2)) == pytest.approx(golden, abs=1e-15)


def test_clt_table_trend():
    rows = clt_table(12)
    ratios = [row.ratio for row in rows]
    assert all(b > a for a, b in zip(ratios, ratios[1:]))
    assert all(r < sqrt(2) for r in ratios)
    assert rows[11].ks_distance < rows[3].ks_distance


@pytest.mark.slow
def test_clt_distance_shrinks_up_to_twenty():
    rows = {row.n: row for row in clt_table(20)}
    distances = [rows[n].ks_distance for n in (4, 8, 16, 20)]
    assert all(b < a for a, b in zip(distances, distances[1:]))


def test_printed_weight_formula_at_golden_atoms(golden):
    atoms = [-golden, -1 / golden, 1 / golden, golden]
    values = [float(printed_weight_formula(k, atoms, [-1.0, 1.0], 128)) for k in range(4)]
    quarter = 1 / (4 * sqrt(5))
    assert values[3] == pytest.approx(quarter, rel=1e-12)
    assert values == pytest.approx([-quarter, -quarter, quarter, quarter], rel=1e-12)


def test_printed_weight_formula_needs_two_levels():
    with pytest.raises(InvalidInputError):
        printed_weight_formula(0, [-1.0, 1.0], [0.0])
    with pytest.raises(InvalidInputError):
        printed_weight_formula(0, [1.0, 1.0, 2.0, 3.0], [-1.0, 1.0])


def test_printed_weight_formula_does_not_normalize():
    comparison = weight_formula_comparison(2)
    # odd in the atom: signed values cancel, magnitudes add up to 1/sqrt(5)
    assert comparison["printed_total"] == pytest.approx(0.0, abs=1e-12)
    assert comparison["printed_abs_total"] == pytest.approx(1 / sqrt(5), abs=1e-12)
    assert comparison["printed_weights"][-1] == pytest.approx(1 / (4 * sqrt(5)), rel=1e-12)
    assert comparison["max_difference"] > 0.1


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_positive_atoms_from_inverse_pairs(n):
    predicted = np.asarray(positive_atoms_by_inverse_pairs(n), dtype=float)
    mu = binomial_measure(n + 1).measure
    assert predicted.tolist() == pytest.approx(mu.atoms_float[2**n:].tolist(), abs=1e-14)


@pytest.mark.parametrize("n", range(1, 13))
def test_monotonicity(n):
    assert monotonicity_holds(n)


def test_lower_bound_polynomial():
    assert not lower_bound_polynomial_positive(1)
    assert all(lower_bound_polynomial_positive(m) for m in range(2, 60))
