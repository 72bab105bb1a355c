"""
Norms of gapped partial sums S_I.

The tuples over I span an S_I-invariant subspace. The order-preserving shift
relabeling carrying {1..|I|} onto I turns S_I on that subspace into S_|I|,
so ||S_I|| equals the largest atom of mu_|I|.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from monofock.core.config import settings
from monofock.fock.basis import BasisVector, IndexSet, TruncationSpec, enumerate_subspace
from monofock.fock.operators import build_sum, invariant_subspace_matrix, restrict
from monofock.logging import InvalidInputError, StructuralViolationError, TruncationError, check_cap, logger
from monofock.measures.binomial import max_atom
from monofock.schemas import NormReport
from monofock.spectral.eigen import eigen_decompose, top_eigenvalue


@dataclass(frozen=True)
class ShiftMap:
    """theta_J = theta_{j_m} o ... o theta_{j_1}, with theta_h(k) = k for k < h and k + 1 otherwise."""

    gaps: tuple[int, ...]

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.gaps, self.gaps[1:])) or any(h < 1 for h in self.gaps):
            raise InvalidInputError(f"Shift gaps must be increasing positive labels, got {self.gaps}")

    @classmethod
    def onto(cls, index_set: IndexSet) -> "ShiftMap":
        """The shift carrying {1..|I|} onto I; its gaps are {1..max I} minus I."""
        return cls(index_set.complement())

    def __call__(self, k: int) -> int:
        for h in self.gaps:
            if k >= h:
                k += 1
        return k

    def apply(self, v: BasisVector) -> BasisVector:
        return tuple(self(k) for k in v)


def _relabeled_block(index_set: IndexSet, trunc: TruncationSpec):
    n = len(index_set)
    shift = ShiftMap.onto(index_set)
    contiguous = enumerate_subspace(tuple(range(1, n + 1)))
    image = [shift.apply(v) for v in contiguous]
    if image != enumerate_subspace(index_set.indices):
        raise StructuralViolationError(f"Shift map does not carry {{1..{n}}} onto {index_set.indices}")
    op = build_sum(index_set, trunc)
    return op, restrict(op, image)


def norm_of_gapped_sum(index_set: IndexSet, trunc: Optional[TruncationSpec] = None) -> NormReport:
    # the truncated operator lives on 2^max(I) tuples
    check_cap("max(I)", index_set.max, settings.norm_trunc_cap)
    trunc = trunc or TruncationSpec(max_index=index_set.max, max_level=index_set.max)
    check_cap("max_index", trunc.max_index, settings.norm_trunc_cap)
    n = len(index_set)
    if trunc.max_level < n:
        raise TruncationError(
            f"Truncation level {trunc.max_level} cannot hold tuples of length {n}",
            details={"indices": list(index_set.indices), "max_level": trunc.max_level},
        )
    op, block = _relabeled_block(index_set, trunc)

    reference = invariant_subspace_matrix(IndexSet.contiguous(n))
    if (block != reference).nnz:
        raise StructuralViolationError(
            f"S_I on tuples over {index_set.indices} differs from S_{n} after relabeling",
            details={"indices": list(index_set.indices)},
        )

    norm = eigen_decompose(block).top if n <= settings.eigen_cap else top_eigenvalue(block)
    expected = float(max_atom(n))
    equals_contiguous = abs(norm - expected) < settings.oracle_tol

    truncated = top_eigenvalue(op.matrix)
    if truncated > norm + settings.oracle_tol:
        raise StructuralViolationError(
            f"Truncated S_I has eigenvalue {truncated:.12f} above the invariant block norm {norm:.12f}",
            details={"indices": list(index_set.indices), "excess": truncated - norm},
        )
    logger.debug(f"||S_I|| for I={index_set.indices}: {norm:.12f} (truncated top {truncated:.12f})")
    return NormReport(
        indices=list(index_set.indices),
        norm=norm,
        equals_contiguous=equals_contiguous,
        relabeling_verified=True,
        truncated_top_eigenvalue=truncated,
    )


def gapped_index_sets(max_label: int, max_size: int, min_size: int = 1) -> list[IndexSet]:
    labels = range(1, max_label + 1)
    return [
        index_set
        for size in range(min_size, max_size + 1)
        for index_set in (IndexSet(indices=c) for c in combinations(labels, size))
        if index_set.is_gapped
    ]


def norm_invariance_check(max_label: int = 8, max_size: int = 4) -> bool:
    """||S_I|| depends only on |I| over every gapped I in {1..max_label}."""
    norms: dict[int, list[float]] = {}
    for index_set in gapped_index_sets(max_label, max_size):
        report = norm_of_gapped_sum(index_set)
        if not report.equals_contiguous:
            logger.warning(f"Gapped norm mismatch for I={index_set.indices}: {report.norm}")
            return False
        norms.setdefault(len(index_set), []).append(report.norm)
    spread = max((float(np.ptp(values)) for values in norms.values()), default=0.0)
    logger.info(f"Gapped norm invariance over {sum(len(v) for v in norms.values())} index sets, spread {spread:.2e}")
    return spread < settings.oracle_tol
