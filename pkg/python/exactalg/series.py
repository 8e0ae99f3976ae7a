# -*- coding: utf-8 -*-
"""有理数係数の一変数形式べき級数と、Conway 多項式の再正規化。

打ち切り次数は常に明示する。係数列は z^0 から z^order までを保持する。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, List, Sequence, Tuple

from .errors import SeriesCompositionError
from .polynomial import Coefficient, normalize_coefficient


@dataclass(frozen=True)
class PowerSeries:
    """z^order までで打ち切った形式べき級数。"""

    coefficients: Tuple[Fraction, ...]
    order: int
    variable: str = "z"

    @classmethod
    def from_coefficients(
        cls, values: Iterable[Coefficient], order: int, variable: str = "z"
    ) -> "PowerSeries":
        if order < 0:
            raise SeriesCompositionError(f"打ち切り次数は 0 以上である必要があります: {order}")
        padded: List[Fraction] = [Fraction(v) for v in values][: order + 1]
        padded.extend(Fraction(0) for _ in range(order + 1 - len(padded)))
        return cls(tuple(padded), order, variable)

    @classmethod
    def one(cls, order: int, variable: str = "z") -> "PowerSeries":
        return cls.from_coefficients([1], order, variable)

    def coefficient(self, index: int) -> Fraction:
        if 0 <= index <= self.order:
            return self.coefficients[index]
        return Fraction(0)

    def _check_compatible(self, other: "PowerSeries") -> int:
        if self.variable != other.variable:
            raise SeriesCompositionError(
                f"変数の異なる級数は演算できません: {self.variable} と {other.variable}"
            )
        return min(self.order, other.order)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order = self._check_compatible(other)
        return PowerSeries.from_coefficients(
            [self.coefficient(i) + other.coefficient(i) for i in range(order + 1)],
            order,
            self.variable,
        )

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-c for c in self.coefficients), self.order, self.variable)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return self + (-other)

    def __mul__(self, other: "PowerSeries | int | Fraction") -> "PowerSeries":
        if isinstance(other, (int, Fraction)):
            return PowerSeries(tuple(c * other for c in self.coefficients), self.order, self.variable)
        order = self._check_compatible(other)
        product = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            left = self.coefficient(i)
            if left == 0:
                continue
            for j in range(order + 1 - i):
                product[i + j] += left * other.coefficient(j)
        return PowerSeries(tuple(product), order, self.variable)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PowerSeries":
        result = PowerSeries.one(self.order, self.variable)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "PowerSeries":
        """乗法逆元。定数項が 0 の場合は SeriesCompositionError。"""

        head = self.coefficient(0)
        if head == 0:
            raise SeriesCompositionError("定数項が 0 の級数は逆元を持ちません")
        result = [Fraction(0)] * (self.order + 1)
        result[0] = 1 / head
        for n in range(1, self.order + 1):
            acc = sum((self.coefficient(k) * result[n - k] for k in range(1, n + 1)), Fraction(0))
            result[n] = -acc / head
        return PowerSeries(tuple(result), self.order, self.variable)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner(z))。inner の定数項が 0 でなければ SeriesCompositionError。"""

        if inner.coefficient(0) != 0:
            raise SeriesCompositionError("内側の級数の定数項が 0 ではないため合成できません")
        order = self._check_compatible(inner)
        result = PowerSeries.from_coefficients([], order, self.variable)
        power = PowerSeries.one(order, self.variable)
        for index in range(order + 1):
            coefficient = self.coefficient(index)
            if coefficient != 0:
                result = result + power * coefficient
            power = power * inner
        return result

    def lowest_nonzero(self) -> Tuple[int, Fraction] | None:
        for index, value in enumerate(self.coefficients):
            if value != 0:
                return index, value
        return None

    def exact_values(self) -> List[Coefficient]:
        return [normalize_coefficient(c) for c in self.coefficients]


def half_sinh_series(order: int) -> PowerSeries:
    """e^{z/2} - e^{-z/2} = Σ_{k 奇数} 2 (1/2)^k / k! z^k。"""

    values = [
        Fraction(2, 2**k * factorial(k)) if k % 2 == 1 else Fraction(0) for k in range(order + 1)
    ]
    return PowerSeries.from_coefficients(values, order)


def renormalization_prefactor(order: int) -> PowerSeries:
    """z / (e^{z/2} - e^{-z/2}) の展開。"""

    # (e^{z/2} - e^{-z/2}) / z の z^k 係数は奇数次係数を 1 つずらしたもの
    quotient = [
        Fraction(2, 2 ** (k + 1) * factorial(k + 1)) if k % 2 == 0 else Fraction(0)
        for k in range(order + 1)
    ]
    return PowerSeries.from_coefficients(quotient, order).inverse()


def series_renormalize(coefficients: Sequence[Coefficient], order: int) -> List[Coefficient]:
    """∇(z) の係数列から再正規化 ∇~(z) の係数を z^order まで求める。"""

    nabla = PowerSeries.from_coefficients(coefficients, order)
    result = renormalization_prefactor(order) * nabla.compose(half_sinh_series(order))
    return result.exact_values()


__all__ = [
    "PowerSeries",
    "half_sinh_series",
    "renormalization_prefactor",
    "series_renormalize",
]
