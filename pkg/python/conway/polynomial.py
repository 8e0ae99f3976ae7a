# -*- coding: utf-8 -*-
"""z の整数係数多項式としての Conway 多項式。"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from exactalg import Coefficient, format_coefficient, normalize_coefficient

from .errors import BraidWordError

_TERM = re.compile(r"^([+-]?(?:\d+(?:/\d+)?)?)(z(\d+)?)?$")


def _trim(values: Sequence[Coefficient]) -> Tuple[Coefficient, ...]:
    trimmed = [normalize_coefficient(Fraction(value)) for value in values]
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    return tuple(trimmed)


@dataclass(frozen=True)
class ConwayPoly:
    """係数列 c_0, c_1, ... 。末尾の 0 は持たない。"""

    coefficients: Tuple[Coefficient, ...] = ()

    @classmethod
    def of(cls, values: Sequence[Coefficient]) -> "ConwayPoly":
        return cls(_trim(values))

    def coefficient(self, index: int) -> Coefficient:
        return self.coefficients[index] if 0 <= index < len(self.coefficients) else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def lowest_nonzero(self) -> Optional[Tuple[int, Coefficient]]:
        for index, value in enumerate(self.coefficients):
            if value != 0:
                return index, value
        return None

    def __add__(self, other: "ConwayPoly") -> "ConwayPoly":
        size = max(len(self.coefficients), len(other.coefficients))
        return ConwayPoly.of([self.coefficient(i) + other.coefficient(i) for i in range(size)])

    def __neg__(self) -> "ConwayPoly":
        return ConwayPoly.of([-value for value in self.coefficients])

    def __sub__(self, other: "ConwayPoly") -> "ConwayPoly":
        return self + (-other)

    def times_z(self) -> "ConwayPoly":
        return ConwayPoly.of([0, *self.coefficients])

    def to_text(self) -> str:
        """``+1 +1*z^2`` 形式。1 次は ``+1*z``、零多項式は ``0``。"""

        parts: List[str] = []
        for index, value in enumerate(self.coefficients):
            if value == 0:
                continue
            head = format_coefficient(value)
            if index == 0:
                parts.append(head)
            elif index == 1:
                parts.append(f"{head}*z")
            else:
                parts.append(f"{head}*z^{index}")
        return " ".join(parts) if parts else "0"

    def __str__(self) -> str:  # noqa: D401
        return self.to_text()


def parse_z_terms(text: str) -> List[Coefficient]:
    """``1 z2 -3z2 2z`` のような空白区切りの項を係数列に集計する。

    各項は ``[係数][z[次数]]``。係数の省略は 1、``z`` だけなら 1 次。
    """

    totals: Dict[int, Fraction] = {}
    tokens = text.split()
    if not tokens:
        raise BraidWordError("多項式の項が 1 つもありません")
    for token in tokens:
        match = _TERM.match(token)
        if not match or (match.group(1) in ("", "+", "-") and match.group(2) is None):
            raise BraidWordError(f"z の項として解釈できません: '{token}'")
        raw_coefficient, has_z, raw_power = match.groups()
        if raw_coefficient in ("", "+"):
            coefficient = Fraction(1)
        elif raw_coefficient == "-":
            coefficient = Fraction(-1)
        else:
            coefficient = Fraction(raw_coefficient)
        power = 0 if has_z is None else int(raw_power or 1)
        totals[power] = totals.get(power, Fraction(0)) + coefficient
    size = max(totals) + 1
    return [normalize_coefficient(totals.get(index, Fraction(0))) for index in range(size)]


__all__ = ["ConwayPoly", "parse_z_terms"]
