"""
Commutant orbits of the vacuum.

For a finite symmetric A the commutant {B : AB = BA} is the nullspace of a
linear system in the d^2 entries of B, solved exactly over QQ. The vacuum is
coordinate 0, so the orbit span{B Omega} is spanned by the first columns of
a nullspace basis.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components

from monofock.core.config import settings
from monofock.fock.basis import BasisVector, IndexSet, TruncationSpec, enumerate_basis
from monofock.fock.operators import build_sum, invariant_subspace_matrix
from monofock.logging import InvalidInputError, StructuralViolationError, check_cap, logger
from monofock.schemas import BlockSpectrum, CounterexampleReport
from monofock.spectral.eigen import eigen_decompose
from monofock.spectral.exact import Vector, domain_matrix, gram_schmidt, in_span, normalise, nullspace

COUNTEREXAMPLE_INDICES = (1, 3)
COUNTEREXAMPLE_TRUNCATION = TruncationSpec(max_index=3, max_level=3)


def _as_rational(matrix) -> list[list[Fraction]]:
    if sparse.issparse(matrix):
        matrix = matrix.toarray()
    rows = [[Fraction(x) for x in row] for row in np.asarray(matrix).astype(object)]
    if not rows or any(len(row) != len(rows) for row in rows):
        raise InvalidInputError("Commutant needs a non-empty square matrix")
    return rows


def _commutator_system(a: list[list[Fraction]]):
    """Rows indexed by (i, k) of AB - BA, columns by the unknown b_jk at j*d + k."""
    d = len(a)
    entries: dict[tuple[int, int], Fraction] = {}
    for i in range(d):
        for j in range(d):
            if not a[i][j]:
                continue
            for k in range(d):
                # (AB)_ik gets a_ij b_jk, (BA)_kj gets b_ki a_ij
                row, col = i * d + k, j * d + k
                entries[(row, col)] = entries.get((row, col), Fraction(0)) + a[i][j]
                row, col = k * d + j, k * d + i
                entries[(row, col)] = entries.get((row, col), Fraction(0)) - a[i][j]
    return domain_matrix(entries, (d * d, d * d))


@dataclass
class CommutantOrbit:
    generator_matrix: list[list[Fraction]]
    commutant_basis: list[Vector]
    orbit_basis: list[Vector] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.generator_matrix)

    @property
    def orbit_dimension(self) -> int:
        return len(self.orbit_basis)

    @property
    def is_cyclic(self) -> bool:
        return self.orbit_dimension == self.dimension

    def matrix(self, r: int) -> list[list[Fraction]]:
        """The r-th commuting matrix of the nullspace basis."""
        d = self.dimension
        flat = self.commutant_basis[r]
        return [flat[j * d:(j + 1) * d] for j in range(d)]

    def commutes(self) -> bool:
        """[A, B] = 0 exactly for every basis matrix B."""
        a = self.generator_matrix
        d = self.dimension
        for r in range(len(self.commutant_basis)):
            b = self.matrix(r)
            for i in range(d):
                for k in range(d):
                    ab = sum((a[i][j] * b[j][k] for j in range(d)), Fraction(0))
                    ba = sum((b[i][j] * a[j][k] for j in range(d)), Fraction(0))
                    if ab != ba:
                        return False
        return True

    def forced_zeros(self) -> list[tuple[int, int]]:
        """(row, column) entries that vanish on the whole commutant."""
        d = self.dimension
        return [
            (j, k) for j in range(d) for k in range(d)
            if all(not flat[j * d + k] for flat in self.commutant_basis)
        ]

    def coordinate_vanishes(self, k: int) -> bool:
        return all(not b[k] for b in self.orbit_basis)

    def contains(self, v: Sequence) -> bool:
        return in_span(self.orbit_basis, v)

    def normalized(self) -> np.ndarray:
        return normalise(self.orbit_basis)


def commutant_orbit(matrix) -> CommutantOrbit:
    a = _as_rational(matrix)
    d = len(a)
    check_cap("dim", d, settings.commutant_dim_cap)
    start = time.time()
    commutant = nullspace(_commutator_system(a))
    orbit = gram_schmidt([[flat[j * d] for j in range(d)] for flat in commutant])
    logger.info(
        f"[TIMING] commutant_orbit dim={d}: commutant {len(commutant)}, orbit {len(orbit)} "
        f"in {time.time() - start:.3f}s"
    )
    return CommutantOrbit(a, commutant, orbit)


def counterexample_matrix() -> tuple[list[BasisVector], np.ndarray]:
    """S_{1,3} on the full truncation N = L = 3, basis in graded-lex order."""
    basis = enumerate_basis(COUNTEREXAMPLE_TRUNCATION)
    op = build_sum(IndexSet(indices=COUNTEREXAMPLE_INDICES), COUNTEREXAMPLE_TRUNCATION)
    return basis, op.dense()


def invariant_blocks(matrix) -> list[list[int]]:
    """Index sets of the connected components of the adjacency pattern."""
    count, labels = connected_components(sparse.csr_matrix(matrix), directed=False)
    return [sorted(np.flatnonzero(labels == c).tolist()) for c in range(count)]


def counterexample_report() -> CounterexampleReport:
    """
    e_2 is not in the commutant orbit of the vacuum for S_{1,3}: every
    commuting B has b_{e2,Omega} = 0, and row Omega is supported on the
    tuples over {1, 3}.
    """
    basis, a = counterexample_matrix()
    orbit = commutant_orbit(a)
    if not orbit.commutes():
        raise StructuralViolationError("Commutant basis matrix fails to commute with S_{1,3}")

    e2 = basis.index((2,))
    zeros = orbit.forced_zeros()
    support = {basis.index(v) for v in [(), (1,), (3,), (1, 3)]}
    expected = {(0, k) for k in range(len(basis)) if k not in support} | {(e2, k) for k in sorted(support)}
    if not expected <= set(zeros):
        raise StructuralViolationError(
            "Commutant of S_{1,3} lacks the forced zero pattern",
            details={"missing": sorted(expected - set(zeros))},
        )

    blocks = []
    for component in invariant_blocks(a):
        sub = a[np.ix_(component, component)]
        blocks.append(BlockSpectrum(
            basis=[list(basis[k]) for k in component],
            eigenvalues=eigen_decompose(sub).eigenvalues.tolist(),
        ))
    return CounterexampleReport(
        indices=list(COUNTEREXAMPLE_INDICES),
        dimension=orbit.dimension,
        orbit_dimension=orbit.orbit_dimension,
        cyclic=orbit.is_cyclic,
        e2_coordinate="0" if orbit.coordinate_vanishes(e2) else "nonzero",
        forced_zeros=[list(z) for z in zeros],
        orbit_basis=[[str(x) for x in b] for b in orbit.orbit_basis],
        blocks=blocks,
    )


def vacuum_cyclic(n: int) -> bool:
    """The commutant orbit of the vacuum fills the invariant subspace of S_n."""
    return commutant_orbit(invariant_subspace_matrix(IndexSet.contiguous(n))).is_cyclic
