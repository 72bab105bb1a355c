from math import sqrt

import pytest

from monofock.logging import InvalidInputError
from monofock.measures.arcsine import EDGE, ArcsineLaw, kolmogorov_distance
from monofock.measures.atomic import bernoulli


@pytest.fixture
def law() -> ArcsineLaw:
    return ArcsineLaw()


def test_support_edge():
    assert EDGE == pytest.approx(sqrt(2))


def test_total_mass(law):
    assert law.total_mass() == pytest.approx(1.0, abs=1e-8)


def test_moments(law):
    assert law.moment(2) == 1.0
    assert law.moment(4) == 1.5
    assert law.moment(6) == 2.5
    assert law.moment(3) == 0.0


def test_density_and_cdf(law):
    assert law.density(0.3) == pytest.approx(law.density(-0.3))
    assert law.density(0.0) == pytest.approx(1 / (3.141592653589793 * sqrt(2)))
    assert law.cdf(0.0) == pytest.approx(0.5)
    assert law.cdf(5.0) == pytest.approx(1.0)
    assert law.cdf(-5.0) == pytest.approx(0.0)


def test_discretization_is_close(law):
    grid = law.discretize(1000)
    assert len(grid) == 1000
    assert kolmogorov_distance(grid, law) <= 1e-3
    with pytest.raises(InvalidInputError):
        law.discretize(0)


def test_kolmogorov_distance_of_bernoulli(law):
    distance = kolmogorov_distance(bernoulli(), law)
    assert 0 < distance < 1
    with pytest.raises(InvalidInputError):
        kolmogorov_distance(bernoulli(), law, scale=0)
