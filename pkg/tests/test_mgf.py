import pytest

from monofock.core.config import settings
from monofock.logging import CapExceededError, InvalidInputError
from monofock.measures.binomial import binomial_measure
from monofock.poly.mgf import (
    exact_moment,
    interlacing_check,
    interlacing_report,
    measure_from_polys,
    mgf_pair,
    moment_vector,
    palindromic_check,
    q_root_partition_check,
    series_increasing_in_m,
    series_of,
    sign_pattern_check,
    structure_check,
    sturm_root_count_matches,
    t_recurrence_check,
)


def test_first_pairs():
    assert mgf_pair(1).denominator.coefficients == (1, 0, -1)
    assert mgf_pair(1).numerator.coefficients == (1,)
    rf = mgf_pair(2)
    assert rf.denominator.coefficients == (1, 0, -3, 0, 1)
    assert rf.numerator.coefficients == (1, 0, -1)


def test_third_denominator():
    assert mgf_pair(3).denominator.coefficients == (1, 0, -7, 0, 13, 0, -7, 0, 1)


def test_dump_uses_decimal_strings():
    dump = mgf_pair(2).to_dump()
    assert dump["P"]["coefficients"] == ["1", "0", "-3", "0", "1"]
    assert dump["Q"]["name"] == "Q_2"


def test_index_checks():
    with pytest.raises(InvalidInputError):
        mgf_pair(0)
    with pytest.raises(CapExceededError):
        mgf_pair(settings.mgf_cap + 1)


def test_moments_from_series():
    assert moment_vector(1, 6) == [1, 0, 1, 0, 1, 0, 1]
    assert moment_vector(2, 6) == [1, 0, 2, 0, 5, 0, 13]
    assert exact_moment(2, 4) == 5
    assert series_of(mgf_pair(3), 2)[2] == 3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_structure(n):
    assert structure_check(n)


@pytest.mark.parametrize("m", range(1, 6))
def test_palindromic_and_real_rooted(m):
    assert palindromic_check(m)
    assert sturm_root_count_matches(m)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_interlacing_and_signs(n):
    assert interlacing_check(n)
    assert sign_pattern_check(n)
    assert q_root_partition_check(n)


def test_interlacing_pattern():
    report = interlacing_report(2)
    assert report.pattern == "pqpqpqp"
    assert (report.p_count, report.q_count) == (4, 3)
    assert report.coprime


@pytest.mark.parametrize("m", [2, 3, 4])
def test_t_recurrence(m):
    assert t_recurrence_check(m, 16)


def test_series_grows_with_m():
    assert series_increasing_in_m(4, 10)


def test_measure_from_polys_matches_mu2(golden, mu2_weights):
    mu = measure_from_polys(2)
    assert mu.atoms_float.tolist() == pytest.approx([-golden, -1 / golden, 1 / golden, golden], abs=1e-14)
    assert mu.weights_float.tolist() == pytest.approx(mu2_weights, abs=1e-14)


@pytest.mark.parametrize("m", [1, 3, 4])
def test_measure_from_polys_matches_recursion(m):
    from_polys = measure_from_polys(m)
    recursive = binomial_measure(m).measure
    assert from_polys.atoms_float.tolist() == pytest.approx(recursive.atoms_float.tolist(), abs=1e-13)
    assert from_polys.weights_float.tolist() == pytest.approx(recursive.weights_float.tolist(), abs=1e-13)
