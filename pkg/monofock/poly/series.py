"""Truncated formal power series with exact rational coefficients."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from monofock.logging import InvalidInputError, PoleError
from monofock.poly.intpoly import IntPoly


@dataclass(frozen=True)
class SeriesTruncation:
    coefficients: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable, order: int) -> "SeriesTruncation":
        padded = [Fraction(v) for v in values][: order + 1]
        padded.extend([Fraction(0)] * (order + 1 - len(padded)))
        return cls(tuple(padded))

    @classmethod
    def one(cls, order: int) -> "SeriesTruncation":
        return cls.of([1], order)

    @classmethod
    def from_poly(cls, p: IntPoly, order: int) -> "SeriesTruncation":
        return cls.of(p.coefficients, order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def _check(self, other: "SeriesTruncation") -> None:
        if other.order != self.order:
            raise InvalidInputError(f"Series orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "SeriesTruncation") -> "SeriesTruncation":
        self._check(other)
        return SeriesTruncation(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "SeriesTruncation") -> "SeriesTruncation":
        self._check(other)
        return SeriesTruncation(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: "SeriesTruncation") -> "SeriesTruncation":
        self._check(other)
        a, b = self.coefficients, other.coefficients
        return SeriesTruncation(
            tuple(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(self.order + 1))
        )

    def shift(self) -> "SeriesTruncation":
        """Multiply by t, dropping the overflowing term."""
        return SeriesTruncation((Fraction(0),) + self.coefficients[:-1])

    def inverse(self) -> "SeriesTruncation":
        a = self.coefficients
        if a[0] == 0:
            raise PoleError("Series with zero constant term has no inverse")
        inv = [1 / a[0]]
        for k in range(1, self.order + 1):
            inv.append(-sum((a[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0)) / a[0])
        return SeriesTruncation(tuple(inv))

    def __truediv__(self, other: "SeriesTruncation") -> "SeriesTruncation":
        return self * other.inverse()

    def substitute_square(self, order: int) -> "SeriesTruncation":
        """S(t^2) truncated at ``order``."""
        if self.order < order // 2:
            raise InvalidInputError(f"Order {self.order} is too short to give S(t^2) to order {order}")
        spread = [Fraction(0)] * (order + 1)
        for k in range(order // 2 + 1):
            spread[2 * k] = self.coefficients[k]
        return SeriesTruncation(tuple(spread))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def as_ints(self) -> list[int]:
        if not self.is_integral():
            raise InvalidInputError("Series has non-integer coefficients")
        return [int(c) for c in self.coefficients]


def t_series_direct(m: int, order: int) -> list[SeriesTruncation]:
    """T_1..T_m from T_m = 1/(1 - t - t * sum_{k=2}^m T_{k-1})."""
    one = SeriesTruncation.one(order)
    t = one.shift()
    series: list[SeriesTruncation] = []
    running = SeriesTruncation.of([], order)
    for _ in range(m):
        series.append((one - t - running.shift()).inverse())
        running = running + series[-1]
    return series


def t_series_nested(m: int, order: int) -> list[SeriesTruncation]:
    """T_1..T_m from T_1 = 1/(1-t) and T_{k+1} = T_k / (1 - t T_k^2)."""
    one = SeriesTruncation.one(order)
    series = [(one - one.shift()).inverse()]
    for _ in range(m - 1):
        prev = series[-1]
        series.append(prev / (one - (prev * prev).shift()))
    return series
