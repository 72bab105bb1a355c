"""
Identity polynomials: coefficients alpha_1..alpha_d with

    alpha_1 S_n^2 + alpha_2 S_n^4 + ... + alpha_d S_n^(2d) = I.

The vacuum is cyclic for S_n on its invariant subspace, so the coefficients
are fixed by the vacuum column alone; the result is then checked on every
column there and on a larger truncation.
"""

import time
from dataclasses import dataclass
from fractions import Fraction

from monofock.core.config import settings
from monofock.fock.basis import IndexSet, TruncationSpec
from monofock.fock.operators import build_sum, invariant_subspace_matrix
from monofock.logging import InvalidInputError, check_cap, logger
from monofock.poly.mgf import mgf_pair
from monofock.spectral.exact import exact_matvec, solve_consistent


@dataclass(frozen=True)
class IdentityPolynomial:
    n: int
    coefficients: tuple[Fraction, ...]
    degree_bound: int

    @property
    def minimal_degree(self) -> int:
        """Number of even powers used; the polynomial in S_n^2 has this degree."""
        return len(self.coefficients)

    @property
    def within_conjectured_bound(self) -> bool:
        return self.minimal_degree <= self.degree_bound


def degree_bound(n: int) -> int:
    return (n - 1) * n // 2 + 1


def _even_powers_on(matrix, vector: list[int], count: int) -> list[list[int]]:
    powers = []
    current = vector
    for _ in range(count):
        current = exact_matvec(matrix, exact_matvec(matrix, current))
        powers.append(current)
    return powers


def _combination(powers: list[list[int]], coefficients) -> list[Fraction]:
    return [sum((a * p[i] for a, p in zip(coefficients, powers)), Fraction(0)) for i in range(len(powers[0]))]


def identity_polynomial(n: int) -> IdentityPolynomial:
    """Minimal-degree solution, searched up to max(bound, 2^(n-1)) even powers."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    check_cap("n", n, settings.identity_cap)
    start = time.time()
    matrix = invariant_subspace_matrix(IndexSet.contiguous(n))
    size = matrix.shape[0]
    bound = degree_bound(n)
    limit = max(bound, 2 ** (n - 1))
    vacuum = [1] + [0] * (size - 1)
    powers = _even_powers_on(matrix, vacuum, limit)

    for d in range(1, limit + 1):
        solution = solve_consistent(powers[:d], vacuum, size)
        if solution is not None:
            result = IdentityPolynomial(n, tuple(solution), bound)
            if not result.within_conjectured_bound:
                logger.warning(f"Identity polynomial for n={n} needs degree {d} > bound {bound}")
            logger.debug(f"Identity polynomial n={n}: {time.time() - start:.2f}s")
            return result
    # unreachable for symmetric matrices: S^2 has at most 2^(n-1) distinct eigenvalues on the cyclic space
    raise InvalidInputError(f"No identity polynomial for n={n} within {limit} even powers")


def verify_on_invariant_subspace(result: IdentityPolynomial) -> bool:
    """sum alpha_k S_n^(2k) e_j = e_j for every basis tuple over {1..n}."""
    matrix = invariant_subspace_matrix(IndexSet.contiguous(result.n))
    size = matrix.shape[0]
    for j in range(size):
        unit = [0] * size
        unit[j] = 1
        image = _combination(_even_powers_on(matrix, unit, result.minimal_degree), result.coefficients)
        if image != unit:
            return False
    return True


def verify_on_truncation(result: IdentityPolynomial, extra: int = 1) -> bool:
    """
    Same identity on the truncation N = L = n + extra, on vectors whose
    whole S_n-orbit stays inside it: a tuple over {1..n} followed by a tail
    over {n+1..N} with n + len(tail) <= L.
    """
    n = result.n
    trunc = TruncationSpec(max_index=n + extra, max_level=n + extra)
    op = build_sum(IndexSet.contiguous(n), trunc)
    matrix = op.matrix.tocsr()
    columns = [
        k for k, v in enumerate(op.basis)
        if n + len([i for i in v if i > n]) <= trunc.max_level
    ]
    for j in columns:
        unit = [0] * op.dim
        unit[j] = 1
        image = _combination(_even_powers_on(matrix, unit, result.minimal_degree), result.coefficients)
        if image != unit:
            return False
    logger.debug(f"Identity polynomial n={n} holds on {len(columns)} columns of {op.dim}")
    return True


def matches_mgf_denominator(result: IdentityPolynomial) -> bool:
    """alpha_k equals minus the t^(2k) coefficient of P_n."""
    p = mgf_pair(result.n).denominator
    expected = tuple(Fraction(-p.coefficient(2 * k)) for k in range(1, p.degree // 2 + 1))
    return result.coefficients == expected
