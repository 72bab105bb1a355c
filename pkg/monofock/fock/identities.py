"""
Exact checks of the monotone commutation relations on truncated matrices.

Each check compares two integer matrices on the columns of basis vectors
deep enough inside the truncation that no factor of the word loses mass
at the boundary.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import sparse

from monofock.fock.basis import IndexSet, TruncationSpec
from monofock.fock.operators import (
    SparseOperator,
    _basis,
    build_annihilator,
    build_creator,
    build_position,
    build_right_annihilator,
    build_right_creator,
    build_right_position,
    build_sum,
    commutator_on_safe_vectors,
    max_abs_on_columns,
    safe_columns,
)
from monofock.logging import logger


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    max_deviation: Optional[int]
    columns_checked: int

    @property
    def passed(self) -> bool:
        return self.max_deviation == 0


def _compare(name: str, lhs, rhs, trunc: TruncationSpec, depth: int) -> IdentityCheck:
    columns = safe_columns(_basis(trunc), trunc, depth)
    deviation = max_abs_on_columns(sparse.csc_matrix(lhs - rhs), columns)
    if deviation:
        logger.warning(f"Identity '{name}' violated: max deviation {deviation}")
    return IdentityCheck(name, deviation, len(columns))


def _worst(name: str, checks: list[IdentityCheck]) -> IdentityCheck:
    deviations = [c.max_deviation for c in checks if c.max_deviation is not None]
    return IdentityCheck(
        name,
        max(deviations) if deviations else None,
        min((c.columns_checked for c in checks), default=0),
    )


def _identity(trunc: TruncationSpec):
    return sparse.identity(trunc.dimension, dtype=np.int64, format="csc")


def check_ordered_products(trunc: TruncationSpec) -> IdentityCheck:
    """a+_i a+_j = 0 and a_j a_i = 0 whenever i >= j."""
    n = trunc.max_index
    creators = [build_creator(i, trunc).matrix for i in range(1, n + 1)]
    annihilators = [build_annihilator(i, trunc).matrix for i in range(1, n + 1)]
    checks = []
    for i in range(n):
        for j in range(i + 1):
            checks.append(_compare("a+a+", creators[i] @ creators[j], 0 * creators[i], trunc, 2))
            checks.append(_compare("aa", annihilators[j] @ annihilators[i], 0 * creators[i], trunc, 2))
    return _worst("ordered products vanish", checks)


def check_cross_annihilation(trunc: TruncationSpec) -> IdentityCheck:
    """a_i a+_j = 0 for i != j, on every basis vector."""
    n = trunc.max_index
    creators = [build_creator(i, trunc).matrix for i in range(1, n + 1)]
    annihilators = [build_annihilator(i, trunc).matrix for i in range(1, n + 1)]
    checks = []
    for i in range(n):
        for j in range(n):
            if i != j:
                checks.append(_compare("a_i a+_j", annihilators[i] @ creators[j], 0 * creators[i], trunc, 0))
    return _worst("cross annihilation", checks)


def check_partition_of_unity(trunc: TruncationSpec) -> IdentityCheck:
    """a_i a+_i + sum_{k<=i} a+_k a_k = 1 for every i."""
    identity = _identity(trunc)
    checks = []
    number_part = 0 * identity
    for i in range(1, trunc.max_index + 1):
        a, ad = build_annihilator(i, trunc).matrix, build_creator(i, trunc).matrix
        number_part = number_part + ad @ a
        checks.append(_compare(f"partition i={i}", a @ ad + number_part, identity, trunc, 2))
    return _worst("partition of unity", checks)


def check_position_powers(trunc: TruncationSpec) -> IdentityCheck:
    """s_i^3 = s_i and s_i^4 = s_i^2."""
    checks = []
    for i in range(1, trunc.max_index + 1):
        s = build_position(i, trunc).matrix
        s2 = s @ s
        checks.append(_compare(f"s{i}^3", s2 @ s, s, trunc, 3))
        checks.append(_compare(f"s{i}^4", s2 @ s2, s2, trunc, 4))
    return _worst("position powers", checks)


def check_neighbour_relations(trunc: TruncationSpec) -> IdentityCheck:
    """s_i^2 s_{i+1} = s_{i+1} and s_{i+1}^2 + sum_{j<=i} s_j s_{j+1}^2 s_j = 1."""
    identity = _identity(trunc)
    positions = [build_position(i, trunc).matrix for i in range(1, trunc.max_index + 1)]
    checks = []
    for i in range(len(positions) - 1):
        s_i, s_next = positions[i], positions[i + 1]
        checks.append(_compare(f"s{i + 1}^2 s{i + 2}", s_i @ s_i @ s_next, s_next, trunc, 3))
        total = s_next @ s_next
        for j in range(i + 1):
            total = total + positions[j] @ positions[j + 1] @ positions[j + 1] @ positions[j]
        checks.append(_compare(f"resolution i={i + 1}", total, identity, trunc, 4))
    return _worst("neighbour relations", checks)


def check_symmetry(trunc: TruncationSpec) -> IdentityCheck:
    ops: list[SparseOperator] = []
    for i in range(1, trunc.max_index + 1):
        ops.append(build_position(i, trunc))
        ops.append(build_right_position(i, trunc))
    ops.append(build_sum(IndexSet.contiguous(trunc.max_index), trunc))
    bad = [op.label for op in ops if not op.is_symmetric()]
    if bad:
        logger.warning(f"Non-symmetric operators: {bad}")
    return IdentityCheck("symmetric matrices", len(bad), len(ops))


def check_unit_columns(trunc: TruncationSpec) -> IdentityCheck:
    """Every elementary operator column holds at most one entry, equal to 1."""
    worst = 0
    builders = (build_annihilator, build_creator, build_right_annihilator, build_right_creator)
    for i in range(1, trunc.max_index + 1):
        for build in builders:
            m = build(i, trunc).matrix
            counts = np.diff(m.indptr)
            worst = max(worst, int(max(counts.max(initial=0) - 1, 0)))
            if m.nnz:
                worst = max(worst, int(np.abs(m.data - 1).max()))
    return IdentityCheck("unit columns", worst, trunc.dimension)


def right_commutation_table(n_max: int, j_max: int, trunc: TruncationSpec) -> dict[tuple[int, int], Optional[int]]:
    """max |[S_n, r_{n+j}]| on safe columns for 1 <= n <= n_max, 1 <= j <= j_max."""
    table: dict[tuple[int, int], Optional[int]] = {}
    for n in range(1, n_max + 1):
        s_n = build_sum(IndexSet.contiguous(n), trunc)
        for j in range(1, j_max + 1):
            if n + j > trunc.max_index:
                continue
            table[(n, j)] = commutator_on_safe_vectors(s_n, build_right_position(n + j, trunc), trunc)
    return table


def check_right_commutation(trunc: TruncationSpec) -> IdentityCheck:
    """[S_n, r_{n+j}] = 0 on safe columns."""
    n_max = max(trunc.max_index - 1, 1)
    table = right_commutation_table(n_max, trunc.max_index, trunc)
    deviations = [d for d in table.values() if d is not None]
    return IdentityCheck("right commutation", max(deviations) if deviations else None, len(deviations))


def run_all(trunc: TruncationSpec) -> list[IdentityCheck]:
    checks = [
        check_ordered_products(trunc),
        check_cross_annihilation(trunc),
        check_partition_of_unity(trunc),
        check_position_powers(trunc),
        check_neighbour_relations(trunc),
        check_symmetry(trunc),
        check_unit_columns(trunc),
        check_right_commutation(trunc),
    ]
    for check in checks:
        logger.debug(f"{check.name}: deviation={check.max_deviation} on {check.columns_checked} columns")
    return checks
