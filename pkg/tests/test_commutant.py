import numpy as np
import pytest

from monofock.core.config import settings
from monofock.logging import CapExceededError, InvalidInputError
from monofock.spectral.commutant import (
    commutant_orbit,
    counterexample_matrix,
    counterexample_report,
    invariant_blocks,
    vacuum_cyclic,
)


def test_identity_commutant_is_everything():
    orbit = commutant_orbit(np.eye(4, dtype=int))
    assert len(orbit.commutant_basis) == 16
    assert orbit.is_cyclic
    assert orbit.commutes()


def test_s2_vacuum_is_cyclic(s2_matrix):
    orbit = commutant_orbit(np.array(s2_matrix))
    # simple spectrum: the commutant is the polynomials in S_2
    assert len(orbit.commutant_basis) == 4
    assert orbit.is_cyclic
    assert orbit.commutes()
    assert orbit.contains([0, 1, 0, 0])
    rows = orbit.normalized()
    assert np.allclose(rows @ rows.T, np.eye(4))


def test_input_checks():
    with pytest.raises(InvalidInputError):
        commutant_orbit(np.zeros((2, 3)))
    with pytest.raises(CapExceededError):
        commutant_orbit(np.eye(settings.commutant_dim_cap + 1, dtype=int))


def test_counterexample_blocks():
    basis, matrix = counterexample_matrix()
    assert basis == [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]
    blocks = invariant_blocks(matrix)
    assert blocks == [[0, 1, 3, 5], [2, 4], [6, 7]]


def test_counterexample_report(golden):
    report = counterexample_report()
    assert report.indices == [1, 3]
    assert report.dimension == 8
    assert report.orbit_dimension == 4
    assert not report.cyclic
    assert report.e2_coordinate == "0"
    # b_{e2, Omega} vanishes on the whole commutant
    assert [2, 0] in report.forced_zeros
    assert [block.basis for block in report.blocks] == [[[], [1], [3], [1, 3]], [[2], [1, 2]], [[2, 3], [1, 2, 3]]]
    assert report.blocks[0].eigenvalues == pytest.approx([-golden, -1 / golden, 1 / golden, golden])
    assert report.blocks[1].eigenvalues == pytest.approx([-1.0, 1.0])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_vacuum_cyclic_for_contiguous_sums(n):
    assert vacuum_cyclic(n)


@pytest.mark.slow
def test_vacuum_cyclic_for_five_summands():
    assert vacuum_cyclic(5)


PRINTED_S13 = [
    [0, 1, 0, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [1, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 0],
]


def test_counterexample_matrix_entries():
    _, matrix = counterexample_matrix()
    assert matrix.tolist() == PRINTED_S13


def test_counterexample_forced_zero_pattern():
    orbit = commutant_orbit(np.array(PRINTED_S13))
    zeros = set(orbit.forced_zeros())
    # the vacuum row is supported on (), (1,), (3,), (1, 3) only
    assert {(0, k) for k in (2, 4, 6, 7)} <= zeros
    assert not {(0, k) for k in (0, 1, 3, 5)} & zeros
    # the e_2 row vanishes on the same four columns
    assert {(2, k) for k in (0, 1, 3, 5)} <= zeros
    assert orbit.coordinate_vanishes(2)
