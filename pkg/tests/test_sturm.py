from fractions import Fraction
from math import sqrt

import pytest

from monofock.logging import InvalidInputError, StructuralViolationError
from monofock.poly.intpoly import ONE, T, T2, IntPoly
from monofock.poly.sturm import (
    cauchy_bound,
    count_real_roots,
    isolate_real_roots,
    positive_roots,
    refine_interval,
    refine_root,
    separate,
)

GOLDEN = (1 + sqrt(5)) / 2


def test_cauchy_bound_exceeds_roots():
    p = IntPoly.from_coefficients([1, 0, -3, 0, 1])
    assert cauchy_bound(p) > GOLDEN


def test_isolates_square_root_of_two():
    intervals = isolate_real_roots(T2 - 2 * ONE)
    assert len(intervals) == 2
    assert intervals[0].hi <= intervals[1].lo
    assert abs(float(refine_root(intervals[1], 60)) - sqrt(2)) < 1e-15
    assert abs(float(refine_root(intervals[0], 60)) + sqrt(2)) < 1e-15


def test_isolates_golden_ratio_roots():
    p = IntPoly.from_coefficients([1, 0, -3, 0, 1])
    roots = [float(refine_root(ri, 60)) for ri in isolate_real_roots(p)]
    assert roots == pytest.approx([-GOLDEN, -1 / GOLDEN, 1 / GOLDEN, GOLDEN], abs=1e-15)


def test_rational_roots_at_bisection_points():
    p = T * (T2 - ONE)
    roots = [refine_root(ri, 40) for ri in isolate_real_roots(p)]
    assert [float(r) for r in roots] == pytest.approx([-1.0, 0.0, 1.0], abs=1e-12)


def test_refinement_width():
    ri = positive_roots(T2 - 2 * ONE)[0]
    fine = refine_interval(ri, Fraction(1, 2**30))
    assert fine.width < Fraction(1, 2**30)
    assert fine.lo < Fraction(3, 2) and fine.hi > Fraction(1)


def test_counts():
    assert count_real_roots(T2 + ONE) == 0
    assert isolate_real_roots(T2 + ONE) == []
    assert count_real_roots(IntPoly.from_coefficients([1, 0, -3, 0, 1])) == 4
    assert len(positive_roots(T2 - 2 * ONE)) == 1
    assert isolate_real_roots(IntPoly.constant(5)) == []


def test_rejects_non_squarefree_and_zero():
    with pytest.raises(StructuralViolationError):
        isolate_real_roots((T - ONE) ** 2)
    with pytest.raises(InvalidInputError):
        isolate_real_roots(IntPoly.from_coefficients([]))


def test_separate_disjoint_roots():
    a = positive_roots(T2 - 2 * ONE)[0]
    b = positive_roots(T2 - 3 * ONE)[0]
    a, b = separate(a, b)
    assert not a.overlaps(b)
    assert a.hi <= b.lo


def test_separate_detects_shared_rational_root():
    a = isolate_real_roots(T - ONE)[0]
    b = isolate_real_roots(T2 - ONE)[1]
    with pytest.raises(StructuralViolationError):
        separate(a, b)
