from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import sparse

from monofock.spectral.exact import dot, exact_matvec, from_columns, gram_schmidt, in_span, normalise, nullspace, solve_consistent

small_vectors = st.lists(
    st.lists(st.integers(min_value=-4, max_value=4), min_size=4, max_size=4),
    min_size=1,
    max_size=5,
)


def test_nullspace_of_rank_one_matrix():
    basis = nullspace(from_columns([[1, 1], [1, 1]], 2))
    assert len(basis) == 1
    x, y = basis[0]
    assert x == -y != 0


def test_solve_consistent():
    columns = [[1, 0, 0], [1, 1, 0]]
    assert solve_consistent(columns, [3, 2, 0], 3) == [Fraction(1), Fraction(2)]
    # outside the span
    assert solve_consistent(columns, [0, 0, 1], 3) is None
    # dependent columns
    assert solve_consistent([[1, 0], [2, 0]], [1, 0], 2) is None


def test_exact_matvec_matches_numpy():
    matrix = sparse.csr_matrix(np.array([[0, 2, 0], [1, 0, 3], [0, 0, 1]], dtype=np.int64))
    assert exact_matvec(matrix, [1, 2, 3]) == [4, 10, 3]
    big = 2**70
    assert exact_matvec(matrix, [big, big, big]) == [2 * big, 4 * big, big]


@given(small_vectors)
@settings(max_examples=40, deadline=None)
def test_gram_schmidt_is_orthogonal_and_spans(vectors):
    basis = gram_schmidt(vectors)
    for i, u in enumerate(basis):
        for v in basis[i + 1:]:
            assert dot(u, v) == 0
    assert all(in_span(basis, v) for v in vectors)
    assert len(basis) == np.linalg.matrix_rank(np.array(vectors, dtype=float))


def test_normalise():
    rows = normalise(gram_schmidt([[3, 4], [1, 0]]))
    assert np.allclose(rows @ rows.T, np.eye(2))
    assert normalise([]).shape == (0, 0)
