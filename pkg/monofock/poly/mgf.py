"""
Moment generating functions of the monotone binomial laws.

M_m(t) = Q_m(t) / P_m(t) with P_1 = 1 - t^2, Q_1 = 1 and

    Q_{m+1} = P_1 P_2 ... P_m,    P_{m+1} = P_m^2 - t^2 Q_m^2.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath

from monofock.core.config import settings
from monofock.logging import InvalidInputError, NumericalResolutionError, StructuralViolationError, check_cap, logger
from monofock.measures.atomic import AtomicMeasure
from monofock.poly.intpoly import ONE, T2, IntPoly
from monofock.poly.series import SeriesTruncation, t_series_direct, t_series_nested
from monofock.poly.sturm import (
    RootInterval,
    bisect,
    isolate_real_roots,
    positive_roots,
    refine_root,
    separate,
    sign_variations,
    sturm_sequence,
    to_mpf,
)


@dataclass(frozen=True)
class RationalFn:
    m: int
    numerator: IntPoly
    denominator: IntPoly

    def to_dump(self) -> dict:
        return {
            "m": self.m,
            "Q": self.numerator.to_dump(f"Q_{self.m}"),
            "P": self.denominator.to_dump(f"P_{self.m}"),
        }


@lru_cache(maxsize=None)
def _pairs(m: int) -> tuple[RationalFn, ...]:
    pairs = [RationalFn(1, ONE, ONE - T2)]
    product = ONE
    for k in range(1, m):
        prev = pairs[-1]
        product = product * prev.denominator
        pairs.append(RationalFn(k + 1, product, prev.denominator**2 - T2 * prev.numerator**2))
    return tuple(pairs)


def mgf_pair(m: int) -> RationalFn:
    if m < 1:
        raise InvalidInputError(f"m must be >= 1, got {m}")
    check_cap("m", m, settings.mgf_cap)
    rf = _pairs(m)[-1]
    if m >= 2 and rf.numerator.degree != 2**m - 2:
        raise StructuralViolationError(f"deg Q_{m} = {rf.numerator.degree}, expected {2**m - 2}")
    return rf


def series_of(rf: RationalFn, order: int) -> SeriesTruncation:
    """Taylor coefficients of Q/P up to t^order."""
    if rf.denominator.coefficient(0) == 0:
        raise InvalidInputError("Denominator vanishes at t = 0")
    return SeriesTruncation.from_poly(rf.numerator, order) / SeriesTruncation.from_poly(rf.denominator, order)


def t_recurrence_check(m: int, order: int) -> bool:
    """Both recurrences for T_m agree, and T_m(t^2) reproduces the series of Q_m / P_m."""
    check_cap("m", m, settings.mgf_cap)
    check_cap("K", order, 64)
    direct = t_series_direct(m, order)
    nested = t_series_nested(m, order)
    if direct != nested:
        logger.warning(f"T recurrences disagree for m={m}, K={order}")
        return False
    expected = series_of(mgf_pair(m), order)
    return direct[-1].substitute_square(order) == expected


def structure_check(n: int) -> bool:
    """P_{n+1} is monic and even with constant term 1; Q_{n+1}(0) = 1."""
    check_cap("n", n, settings.structure_cap)
    rf = mgf_pair(n + 1)
    p = rf.denominator
    return (
        p.leading == 1
        and p.degree == 2 ** (n + 1)
        and p.coefficient(0) == 1
        and p.is_even()
        and rf.numerator.coefficient(0) == 1
    )


def palindromic_check(m: int) -> bool:
    """Roots of P_m are closed under t -> -t and t -> 1/t."""
    p = mgf_pair(m).denominator
    return p.is_even() and p.reversed() in (p, -p)


@dataclass
class InterlacingReport:
    n: int
    p_count: int
    q_count: int
    pattern: str
    coprime: bool
    passed: bool = field(init=False)

    def __post_init__(self):
        expected = "pq" * (2**self.n - 1) + "p"
        self.passed = self.coprime and self.pattern == expected


def _merge(p_roots: list[RootInterval], q_roots: list[RootInterval]) -> str:
    tagged = [(ri, "p") for ri in p_roots] + [(ri, "q") for ri in q_roots]
    while True:
        tagged.sort(key=lambda item: item[0].lo)
        for k in range(len(tagged) - 1):
            (a, ta), (b, tb) = tagged[k], tagged[k + 1]
            if ta != tb and a.overlaps(b):
                a, b = separate(a, b)
                tagged[k], tagged[k + 1] = (a, ta), (b, tb)
                break
        else:
            return "".join(tag for _, tag in tagged)


def interlacing_report(n: int) -> InterlacingReport:
    check_cap("n", n, settings.interlacing_cap)
    rf = mgf_pair(n + 1)
    p_roots = positive_roots(rf.denominator)
    q_roots = positive_roots(rf.numerator)
    base = mgf_pair(n)
    coprime = base.denominator.gcd(base.numerator).degree == 0
    report = InterlacingReport(n, len(p_roots), len(q_roots), _merge(p_roots, q_roots), coprime)
    if not report.passed:
        logger.warning(f"Interlacing fails at n={n}: pattern {report.pattern}")
    return report


def interlacing_check(n: int) -> bool:
    return interlacing_report(n).passed


def q_root_partition_check(n: int) -> bool:
    """Q_{n+1} = P_1 ... P_n with pairwise coprime factors, so its roots split disjointly."""
    check_cap("n", n, settings.interlacing_cap)
    factors = [mgf_pair(k).denominator for k in range(1, n + 1)]
    q = mgf_pair(n + 1).numerator
    remainder = q
    for f in factors:
        remainder = remainder.exact_quotient(f)
    if remainder.degree != 0:
        return False
    return all(factors[i].gcd(factors[j]).degree == 0 for i in range(n) for j in range(i + 1, n))


def _sign_on(p: IntPoly, chain: list[IntPoly], ri: RootInterval) -> int:
    """Sign of p on an isolating interval of another polynomial, refining until p has no root there."""
    while True:
        clear = p.sign_at(ri.lo) != 0 and p.sign_at(ri.hi) != 0
        if clear and sign_variations(chain, ri.lo) == sign_variations(chain, ri.hi):
            return p.sign_at(ri.hi)
        ri = bisect(ri)
        if ri.width == 0:
            return p.sign_at(ri.lo)


def sign_pattern_check(n: int) -> bool:
    """P_{n+1} < 0 at the positive roots of P_n and > 0 at those of Q_n."""
    check_cap("n", n, settings.interlacing_cap)
    base, nxt = mgf_pair(n), mgf_pair(n + 1).denominator
    chain = sturm_sequence(nxt)
    negative = all(_sign_on(nxt, chain, ri) < 0 for ri in positive_roots(base.denominator))
    if base.numerator.degree == 0:
        return negative
    return negative and all(_sign_on(nxt, chain, ri) > 0 for ri in positive_roots(base.numerator))


def sturm_root_count_matches(m: int) -> bool:
    p = mgf_pair(m).denominator
    return len(isolate_real_roots(p)) == p.degree


def _partner(i: int, half: int) -> int:
    # index of 1/root_i among the sorted roots of a palindromic even polynomial
    return 3 * half - 1 - i if i >= half else half - 1 - i


def measure_from_polys(m: int, precision_bits: int = 0) -> AtomicMeasure:
    """
    mu_m from the poles of its moment generating function.

    The roots of P_m are the atoms themselves; atom r_k takes the residue
    -Q_m(t) / (t P_m'(t)) at t = 1/r_k, found as a root by palindromy.
    """
    check_cap("m", m, settings.measure_from_polys_cap)
    bits = precision_bits or settings.precision_bits
    rf = mgf_pair(m)
    p, q = rf.denominator, rf.numerator
    dp = p.derivative()
    intervals = isolate_real_roots(p)
    if len(intervals) != p.degree:
        raise NumericalResolutionError(f"P_{m} has {len(intervals)} real roots, expected {p.degree}")
    half = len(intervals) // 2
    with mpmath.workprec(bits + 32):
        roots = [to_mpf(refine_root(ri, bits + 16)) for ri in intervals]
        weights = []
        for i, atom in enumerate(roots):
            tk = roots[_partner(i, half)]
            if abs(atom * tk - 1) > mpmath.ldexp(1, -bits):
                raise StructuralViolationError(f"Roots of P_{m} are not in inverse pairs at index {i}")
            residue = -q.evaluate_mp(tk) / (tk * dp.evaluate_mp(tk))
            if residue <= 0:
                raise NumericalResolutionError(f"Non-positive residue at atom {float(atom)}", details={"m": m})
            weights.append(residue)
        return AtomicMeasure.from_points(roots, weights, bits, f"mu_{m} (poles)")


def moment_vector(m: int, order: int) -> list[int]:
    """Moments 0..order of mu_m read off the series of Q_m / P_m."""
    return series_of(mgf_pair(m), order).as_ints()


def series_increasing_in_m(max_m: int, order: int) -> bool:
    """Even coefficients grow strictly with m at every order >= 2."""
    rows = [moment_vector(m, order) for m in range(1, max_m + 1)]
    return all(all(b[k] > a[k] for k in range(2, order + 1, 2)) for a, b in zip(rows, rows[1:]))


def exact_moment(m: int, k: int) -> Fraction:
    return series_of(mgf_pair(m), k)[k]
