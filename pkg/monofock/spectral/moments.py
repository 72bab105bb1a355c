"""Exact vacuum moments (S_n^k)_00 on the invariant subspace."""

from functools import lru_cache

import numpy as np

from monofock.core.config import settings
from monofock.fock.basis import IndexSet
from monofock.fock.operators import invariant_subspace_matrix
from monofock.logging import InvalidInputError, check_cap
from monofock.spectral.exact import exact_matvec

INT64_SAFE = 2**62


@lru_cache(maxsize=8)
def _generator(n: int):
    return invariant_subspace_matrix(IndexSet.contiguous(n))


def _power_on_vacuum(n: int, j: int):
    """S_n^j applied to the vacuum; int64 while the entries provably fit."""
    matrix = _generator(n)
    vector = np.zeros(matrix.shape[0], dtype=np.int64)
    vector[0] = 1
    # every entry of S^j e_0 is bounded by ||S||^j <= (2n)^(j/2)
    if (2 * n) ** j < INT64_SAFE**2:
        for _ in range(j):
            vector = matrix @ vector
        return [int(v) for v in vector]
    exact = [int(v) for v in vector]
    for _ in range(j):
        exact = exact_matvec(matrix, exact)
    return exact


def moment_oracle(n: int, k: int) -> int:
    """(S_n^k)_00 = <S^ceil(k/2) Omega, S^floor(k/2) Omega>, exactly."""
    if n < 1 or k < 0:
        raise InvalidInputError(f"Expects n >= 1 and k >= 0, got n={n}, k={k}")
    check_cap("n", n, settings.moment_cap_n)
    check_cap("k", k, settings.moment_cap_k)
    upper = _power_on_vacuum(n, (k + 1) // 2)
    lower = upper if k % 2 == 0 else _power_on_vacuum(n, k // 2)
    return sum(u * v for u, v in zip(upper, lower))
