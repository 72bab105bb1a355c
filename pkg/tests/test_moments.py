import pytest

from monofock.core.config import settings
from monofock.logging import CapExceededError, InvalidInputError
from monofock.measures.atomic import moments
from monofock.measures.binomial import binomial_measure
from monofock.poly.mgf import exact_moment
from monofock.spectral.moments import moment_oracle


@pytest.mark.parametrize("n,k,expected", [(1, 2, 1), (2, 4, 5), (2, 3, 0), (2, 0, 1), (2, 6, 13), (3, 2, 3)])
def test_known_moments(n, k, expected):
    assert moment_oracle(n, k) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_three_routes_agree(n):
    mu = binomial_measure(n).measure
    for k in range(0, 13):
        oracle = moment_oracle(n, k)
        assert oracle == exact_moment(n, k)
        assert moments(mu, k) == pytest.approx(oracle, rel=1e-12, abs=1e-12)


def test_large_n_stays_exact():
    value = moment_oracle(settings.moment_cap_n, 8)
    assert isinstance(value, int)
    assert value == pytest.approx(moments(binomial_measure(16, 53).measure, 8), rel=1e-10)


def test_arguments_are_checked():
    with pytest.raises(InvalidInputError):
        moment_oracle(0, 2)
    with pytest.raises(InvalidInputError):
        moment_oracle(1, -1)
    with pytest.raises(CapExceededError):
        moment_oracle(settings.moment_cap_n + 1, 2)
    with pytest.raises(CapExceededError):
        moment_oracle(2, settings.moment_cap_k + 1)
