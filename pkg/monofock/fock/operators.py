"""
Exact sparse matrices of monotone creation, annihilation and position
operators over a truncated basis.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import numpy as np
from scipy import sparse

from monofock.core.config import settings
from monofock.fock.basis import (
    BasisVector,
    IndexSet,
    TruncationSpec,
    annihilate,
    create,
    enumerate_basis,
    right_annihilate,
    right_create,
)
from monofock.logging import TruncationError, check_cap, logger

Action = Callable[[int, BasisVector], Optional[BasisVector]]


@dataclass(frozen=True, eq=False)
class SparseOperator:
    trunc: TruncationSpec
    basis: tuple[BasisVector, ...]
    matrix: sparse.csc_matrix
    label: str = ""
    _index: dict[BasisVector, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._index:
            self._index.update({v: k for k, v in enumerate(self.basis)})

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index_of(self, v: BasisVector) -> int:
        return self._index[v]

    def dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def is_symmetric(self) -> bool:
        return (self.matrix != self.matrix.T).nnz == 0

    def _derive(self, matrix, label: str) -> "SparseOperator":
        return SparseOperator(self.trunc, self.basis, sparse.csc_matrix(matrix), label, self._index)

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        self._same_basis(other)
        return self._derive(self.matrix + other.matrix, f"({self.label}+{other.label})")

    def __sub__(self, other: "SparseOperator") -> "SparseOperator":
        self._same_basis(other)
        return self._derive(self.matrix - other.matrix, f"({self.label}-{other.label})")

    def __matmul__(self, other: "SparseOperator") -> "SparseOperator":
        self._same_basis(other)
        return self._derive(self.matrix @ other.matrix, f"{self.label}{other.label}")

    def _same_basis(self, other: "SparseOperator") -> None:
        if self.trunc != other.trunc:
            raise TruncationError("Operators live on different truncations")


def _assemble(action: Action, i: int, trunc: TruncationSpec, label: str) -> SparseOperator:
    if i > trunc.max_index:
        raise TruncationError(
            f"Index {i} exceeds the truncation max_index={trunc.max_index}",
            details={"index": i, "max_index": trunc.max_index},
        )
    basis = _basis(trunc)
    index = {v: k for k, v in enumerate(basis)}
    rows, cols = [], []
    for col, v in enumerate(basis):
        image = action(i, v)
        # creations leaving the truncation are dropped
        if image is not None and image in index:
            rows.append(index[image])
            cols.append(col)
    data = np.ones(len(rows), dtype=np.int64)
    matrix = sparse.csc_matrix((data, (rows, cols)), shape=(len(basis), len(basis)), dtype=np.int64)
    return SparseOperator(trunc, basis, matrix, label, index)


@lru_cache(maxsize=32)
def _basis(trunc: TruncationSpec) -> tuple[BasisVector, ...]:
    return tuple(enumerate_basis(trunc))


def build_annihilator(i: int, trunc: TruncationSpec) -> SparseOperator:
    return _assemble(annihilate, i, trunc, f"a{i}")


def build_creator(i: int, trunc: TruncationSpec) -> SparseOperator:
    return _assemble(create, i, trunc, f"a+{i}")


def build_right_annihilator(i: int, trunc: TruncationSpec) -> SparseOperator:
    return _assemble(right_annihilate, i, trunc, f"b{i}")


def build_right_creator(i: int, trunc: TruncationSpec) -> SparseOperator:
    return _assemble(right_create, i, trunc, f"b+{i}")


def build_position(i: int, trunc: TruncationSpec) -> SparseOperator:
    op = build_annihilator(i, trunc) + build_creator(i, trunc)
    return op._derive(op.matrix, f"s{i}")


def build_right_position(i: int, trunc: TruncationSpec) -> SparseOperator:
    op = build_right_annihilator(i, trunc) + build_right_creator(i, trunc)
    return op._derive(op.matrix, f"r{i}")


def build_sum(index_set: IndexSet, trunc: TruncationSpec) -> SparseOperator:
    if index_set.max > trunc.max_index:
        raise TruncationError(
            f"Index set {index_set.indices} exceeds max_index={trunc.max_index}",
            details={"indices": list(index_set.indices), "max_index": trunc.max_index},
        )
    terms = [build_position(i, trunc) for i in index_set.indices]
    total = terms[0].matrix.copy()
    for term in terms[1:]:
        total = total + term.matrix
    label = "S_{" + ",".join(str(i) for i in index_set.indices) + "}"
    return terms[0]._derive(total, label)


def restrict(op: SparseOperator, vectors: list[BasisVector]) -> sparse.csr_matrix:
    """Rows and columns of ``op`` belonging to ``vectors``, in the given order."""
    positions = [op.index_of(v) for v in vectors]
    return sparse.csr_matrix(op.matrix.tocsr()[positions][:, positions])


def graded_lex_order(n: int) -> np.ndarray:
    """
    Rank of every bitmask over n labels in graded-lexicographic order.

    Bit q of a mask stands for the q-th smallest label. Within a level,
    lexicographic order on sorted tuples is descending order of the
    bit-reversed mask.
    """
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    popcount = np.zeros(size, dtype=np.int64)
    reversed_mask = np.zeros(size, dtype=np.int64)
    for q in range(n):
        bit = (masks >> q) & 1
        popcount += bit
        reversed_mask |= bit << (n - 1 - q)
    order = np.lexsort((-reversed_mask, popcount))
    rank = np.empty(size, dtype=np.int64)
    rank[order] = np.arange(size, dtype=np.int64)
    return rank


def invariant_subspace_matrix(index_set: IndexSet) -> sparse.csr_matrix:
    """
    Restriction of S_I to the span of tuples drawn from I (contains the vacuum).

    Exact int64 entries, graded-lex basis with the vacuum at position 0.
    """
    n = len(index_set)
    check_cap("|I|", n, settings.invariant_cap)
    size = 1 << n
    rank = graded_lex_order(n)
    masks = np.arange(size, dtype=np.int64)

    # position of the smallest label present; n for the vacuum
    lowest = np.full(size, n, dtype=np.int64)
    for q in reversed(range(n)):
        lowest[((masks >> q) & 1) == 1] = q

    occupied = masks[masks != 0]
    rows = [rank[occupied ^ (1 << lowest[occupied])]]
    cols = [rank[occupied]]
    for q in range(n):
        # prepend label q: allowed when q is below the smallest present label
        free = masks[lowest > q]
        rows.append(rank[free | (1 << q)])
        cols.append(rank[free])

    row = np.concatenate(rows)
    col = np.concatenate(cols)
    data = np.ones(len(row), dtype=np.int64)
    matrix = sparse.csr_matrix((data, (row, col)), shape=(size, size), dtype=np.int64)
    logger.debug(f"Invariant subspace for I={index_set.indices}: dim={size}, nnz={matrix.nnz}")
    return matrix


def safe_columns(basis: tuple[BasisVector, ...], trunc: TruncationSpec, depth: int) -> np.ndarray:
    """Columns whose images under any word of ``depth`` factors stay in the truncation."""
    return np.array([k for k, v in enumerate(basis) if len(v) + depth <= trunc.max_level], dtype=np.int64)


def max_abs_on_columns(matrix, columns: np.ndarray) -> Optional[int]:
    if len(columns) == 0:
        return None
    block = sparse.csc_matrix(matrix)[:, columns]
    if block.nnz == 0:
        return 0
    return int(abs(block).max())


def commutator_on_safe_vectors(
    op_a: SparseOperator,
    op_b: SparseOperator,
    trunc: TruncationSpec,
) -> Optional[int]:
    """
    Max |entry| of AB - BA over columns of 2-safe basis vectors.

    Returns None when no column is safe.
    """
    op_a._same_basis(op_b)
    if op_a.trunc != trunc:
        raise TruncationError("Operators were not built on the requested truncation")
    commutator = op_a.matrix @ op_b.matrix - op_b.matrix @ op_a.matrix
    return max_abs_on_columns(commutator, safe_columns(op_a.basis, trunc, depth=2))
