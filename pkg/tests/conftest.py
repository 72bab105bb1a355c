from math import sqrt

import pytest

from monofock.fock.basis import TruncationSpec


@pytest.fixture
def trunc3() -> TruncationSpec:
    return TruncationSpec(max_index=3, max_level=3)


@pytest.fixture
def trunc5() -> TruncationSpec:
    return TruncationSpec(max_index=5, max_level=5)


@pytest.fixture
def s2_matrix():
    """S_2 on span{(), (1,), (2,), (1, 2)}."""
    return [
        [0, 1, 1, 0],
        [1, 0, 0, 0],
        [1, 0, 0, 1],
        [0, 0, 1, 0],
    ]


@pytest.fixture
def golden() -> float:
    return (1 + sqrt(5)) / 2


@pytest.fixture
def mu2_weights() -> list[float]:
    """Vacuum weights of mu_2 at -phi, -1/phi, 1/phi, phi."""
    outer, inner = (5 + sqrt(5)) / 20, (5 - sqrt(5)) / 20
    return [outer, inner, inner, outer]
