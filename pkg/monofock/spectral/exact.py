"""Exact integer and rational linear algebra helpers."""

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from scipy import sparse
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Vector = list[Fraction]


def to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def exact_matvec(matrix: sparse.csr_matrix, x: Sequence[int]) -> list[int]:
    """y = M x over Python ints, for entries beyond int64 range."""
    indptr, indices, data = matrix.indptr, matrix.indices, matrix.data
    return [
        sum(int(data[p]) * x[indices[p]] for p in range(indptr[i], indptr[i + 1]))
        for i in range(matrix.shape[0])
    ]


def domain_matrix(entries: dict[tuple[int, int], Fraction], shape: tuple[int, int]) -> DomainMatrix:
    """Sparse QQ matrix from {(row, col): value}."""
    rows: dict[int, dict[int, object]] = {}
    for (i, j), v in entries.items():
        if v:
            rows.setdefault(i, {})[j] = QQ(v.numerator, v.denominator)
    return DomainMatrix(rows, shape, QQ)


def from_columns(columns: Sequence[Sequence], size: int) -> DomainMatrix:
    entries = {}
    for j, column in enumerate(columns):
        for i, v in enumerate(column):
            if v:
                entries[(i, j)] = Fraction(v)
    return domain_matrix(entries, (size, len(columns)))


def nullspace(matrix: DomainMatrix) -> list[Vector]:
    """Basis of the right nullspace as Fraction vectors."""
    basis = matrix.to_field().nullspace()
    return [[to_fraction(x) for x in row] for row in basis.to_dense().to_list()]


def solve_consistent(columns: Sequence[Sequence], rhs: Sequence, size: int) -> Optional[Vector]:
    """
    The unique x with sum_k x_k columns[k] = rhs, or None.

    None when the system is inconsistent or underdetermined.
    """
    k = len(columns)
    augmented = from_columns(list(columns) + [list(rhs)], size).to_field()
    reduced, pivots = augmented.rref()
    if k in pivots or len(pivots) < k:
        return None
    dense = reduced.to_dense().to_list()
    solution = [Fraction(0)] * k
    for row, col in enumerate(pivots):
        solution[col] = to_fraction(dense[row][k])
    return solution


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def gram_schmidt(vectors: Sequence[Sequence[Fraction]]) -> list[Vector]:
    """Exact orthogonal (not normalised) basis of the span."""
    basis: list[Vector] = []
    for v in vectors:
        w = [Fraction(x) for x in v]
        for b in basis:
            coefficient = dot(w, b) / dot(b, b)
            if coefficient:
                w = [x - coefficient * y for x, y in zip(w, b)]
        if any(w):
            basis.append(w)
    return basis


def in_span(orthogonal_basis: Sequence[Vector], v: Sequence) -> bool:
    residual = [Fraction(x) for x in v]
    for b in orthogonal_basis:
        coefficient = dot(residual, b) / dot(b, b)
        residual = [x - coefficient * y for x, y in zip(residual, b)]
    return not any(residual)


def normalise(orthogonal_basis: Sequence[Vector]) -> np.ndarray:
    """Rows of the float64 orthonormal basis."""
    if not orthogonal_basis:
        return np.zeros((0, 0))
    rows = np.array([[float(x) for x in b] for b in orthogonal_basis], dtype=np.float64)
    return rows / np.linalg.norm(rows, axis=1, keepdims=True)
