"""
Eigen-decomposition oracle for finite symmetric restrictions.

The vacuum is coordinate 0 of every basis used here, so the squared first
components of the orthonormal eigenvectors form the vacuum spectral measure.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import eigsh

from monofock.core.config import settings
from monofock.fock.basis import IndexSet
from monofock.fock.operators import invariant_subspace_matrix
from monofock.logging import NonSymmetricMatrixError, NumericalResolutionError, check_cap, logger
from monofock.measures.binomial import binomial_measure, max_atom

# simple-spectrum matrices whose eigenvalues come closer than this are rejected
SEPARATION_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    eigenvalues: np.ndarray
    vacuum_weights: np.ndarray
    dim: int
    max_residual: float = 0.0

    @property
    def top(self) -> float:
        return float(self.eigenvalues[-1])


def _as_dense(matrix) -> np.ndarray:
    if sparse.issparse(matrix):
        return matrix.toarray()
    return np.asarray(matrix)


def eigen_decompose(matrix, tol: Optional[float] = None, simple_spectrum: bool = False) -> SpectralDecomposition:
    """Full symmetric eigen-decomposition with a residual check on every pair."""
    tol = tol if tol is not None else settings.eigen_residual_tol
    dense = _as_dense(matrix)
    if dense.ndim != 2 or dense.shape[0] != dense.shape[1] or not np.array_equal(dense, dense.T):
        raise NonSymmetricMatrixError("Eigen-decomposition needs an exactly symmetric square matrix")
    a = dense.astype(np.float64)
    values, vectors = np.linalg.eigh(a)
    scale = max(1.0, float(np.max(np.abs(values)))) if a.size else 1.0
    residual = float(np.max(np.linalg.norm(a @ vectors - vectors * values, axis=0))) if a.size else 0.0
    if residual > tol * scale:
        raise NumericalResolutionError(
            f"Eigen residual {residual:.3e} exceeds {tol:.1e}",
            details={"residual": residual, "dim": a.shape[0]},
        )
    if simple_spectrum and len(values) > 1 and float(np.min(np.diff(values))) < SEPARATION_TOL:
        raise NumericalResolutionError("Eigenvalues of a simple-spectrum matrix are not separated")
    return SpectralDecomposition(values, vectors[0, :] ** 2, a.shape[0], residual)


def top_eigenvalue(matrix) -> float:
    """Largest eigenvalue; iterative for large sparse input."""
    size = matrix.shape[0]
    if size <= 2**settings.eigen_cap:
        return eigen_decompose(matrix).top
    values = eigsh(sparse.csr_matrix(matrix, dtype=np.float64), k=1, which="LA", return_eigenvectors=False)
    return float(values[0])


def spectrum_support_check(n: int, tol: Optional[float] = None) -> bool:
    """
    Eigenvalues of S_n on its invariant subspace are the atoms of mu_n, the
    vacuum weights are the weights of mu_n and all positive, and the top
    eigenvalue is the largest atom.
    """
    check_cap("n", n, settings.eigen_cap)
    tol = tol if tol is not None else settings.oracle_tol
    decomposition = eigen_decompose(invariant_subspace_matrix(IndexSet.contiguous(n)), simple_spectrum=True)
    mu = binomial_measure(n).measure
    atoms_ok = float(np.max(np.abs(decomposition.eigenvalues - mu.atoms_float))) < tol
    weights_ok = float(np.max(np.abs(decomposition.vacuum_weights - mu.weights_float))) < tol
    positive = bool(np.all(decomposition.vacuum_weights > 0))
    norm_ok = abs(decomposition.top - float(max_atom(n))) < tol
    if not (atoms_ok and weights_ok and positive and norm_ok):
        logger.warning(
            f"Spectrum/support mismatch at n={n}: atoms={atoms_ok} weights={weights_ok} "
            f"positive={positive} norm={norm_ok}"
        )
    return atoms_ok and weights_ok and positive and norm_ok
