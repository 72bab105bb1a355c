"""
Truncated monotone Fock basis.

A basis vector is a strictly increasing tuple of positive integers; the empty
tuple is the vacuum. The four elementary actions (left and right creation and
annihilation) return the image tuple or ``None`` for zero. They never
truncate: truncation is applied only when operators are assembled into
matrices (see ``monofock.fock.operators``).
"""

from itertools import combinations
from math import comb
from typing import Optional

from pydantic import BaseModel, Field, field_validator

from monofock.logging import InvalidInputError

BasisVector = tuple[int, ...]

VACUUM: BasisVector = ()


class TruncationSpec(BaseModel, frozen=True):
    max_index: int = Field(..., ge=1, description="Largest particle label N")
    max_level: int = Field(..., ge=1, description="Largest particle number L")

    @property
    def dimension(self) -> int:
        top = min(self.max_level, self.max_index)
        return sum(comb(self.max_index, k) for k in range(top + 1))

    def contains(self, v: BasisVector) -> bool:
        return len(v) <= self.max_level and all(i <= self.max_index for i in v)


class IndexSet(BaseModel, frozen=True):
    indices: tuple[int, ...] = Field(..., min_length=1, description="Strictly increasing positive labels")

    @field_validator("indices")
    @classmethod
    def _strictly_increasing(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(i < 1 for i in value):
            raise ValueError("indices must be positive")
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("indices must be strictly increasing without duplicates")
        return value

    @classmethod
    def contiguous(cls, n: int) -> "IndexSet":
        return cls(indices=tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "IndexSet":
        """Build an IndexSet from a comma-separated string such as ``"1,3"``."""
        try:
            values = tuple(sorted(int(part) for part in text.split(",") if part.strip()))
            return cls(indices=values)
        except ValueError as e:
            raise InvalidInputError(f"Invalid index set '{text}': {e}")

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def max(self) -> int:
        return self.indices[-1]

    @property
    def is_gapped(self) -> bool:
        return self.indices != tuple(range(1, len(self.indices) + 1))

    def complement(self) -> tuple[int, ...]:
        """J = {1..max(I)} minus I."""
        members = set(self.indices)
        return tuple(k for k in range(1, self.max + 1) if k not in members)


def validate_basis_vector(v: BasisVector) -> BasisVector:
    if any(i < 1 for i in v) or any(b <= a for a, b in zip(v, v[1:])):
        raise InvalidInputError(f"{v} is not a strictly increasing tuple of positive integers")
    return v


def enumerate_basis(trunc: TruncationSpec) -> list[BasisVector]:
    """All tuples over {1..N} of length <= L, graded-lexicographic, vacuum first."""
    basis: list[BasisVector] = [VACUUM]
    labels = range(1, trunc.max_index + 1)
    for level in range(1, min(trunc.max_level, trunc.max_index) + 1):
        basis.extend(combinations(labels, level))
    return basis


def enumerate_subspace(indices: tuple[int, ...]) -> list[BasisVector]:
    """All tuples drawn from ``indices``, graded-lexicographic, vacuum first."""
    basis: list[BasisVector] = [VACUUM]
    for level in range(1, len(indices) + 1):
        basis.extend(combinations(indices, level))
    return basis


def _check_label(i: int) -> None:
    if i < 1:
        raise InvalidInputError(f"Particle label must be >= 1, got {i}")


def annihilate(i: int, v: BasisVector) -> Optional[BasisVector]:
    _check_label(i)
    if v and v[0] == i:
        return v[1:]
    return None


def create(i: int, v: BasisVector) -> Optional[BasisVector]:
    _check_label(i)
    if not v or i < v[0]:
        return (i,) + v
    return None


def right_annihilate(i: int, v: BasisVector) -> Optional[BasisVector]:
    _check_label(i)
    if v and v[-1] == i:
        return v[:-1]
    return None


def right_create(i: int, v: BasisVector) -> Optional[BasisVector]:
    _check_label(i)
    if not v or i > v[-1]:
        return v + (i,)
    return None
