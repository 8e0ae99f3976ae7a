# -*- coding: utf-8 -*-
"""多変数多項式 (整数・有理数係数) の不変表現。

単項式は変数の多重集合を (kind, 添字) の辞書順で並べたタプルとして表し、
項の表示順は「次数 → 因子列の辞書順」で固定する。テキスト表現はこの順序に従う。
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Tuple, Union

from .errors import InvalidVariableError
from .variables import VarId

Coefficient = Union[int, Fraction]


def normalize_coefficient(value: Coefficient) -> Coefficient:
    """分母 1 の Fraction を int に落とし、係数表現を一意にする。"""

    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"厳密係数ではありません: {value!r}")


def format_coefficient(value: Coefficient) -> str:
    """符号を必ず明示した係数表記 (``+3`` / ``-1/24``)。"""

    sign = "-" if value < 0 else "+"
    magnitude = abs(normalize_coefficient(value))
    if isinstance(magnitude, Fraction):
        return f"{sign}{magnitude.numerator}/{magnitude.denominator}"
    return f"{sign}{magnitude}"


class Monomial(NamedTuple):
    """正規順に並んだ変数の多重集合。"""

    factors: Tuple[VarId, ...]

    @classmethod
    def of(cls, factors: Iterable[VarId]) -> "Monomial":
        return cls(tuple(sorted(factors)))

    @property
    def degree(self) -> int:
        return len(self.factors)

    def sort_key(self) -> Tuple[int, Tuple[VarId, ...]]:
        return (len(self.factors), self.factors)

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(sorted(self.factors + other.factors)))

    def multiplicity(self, var: VarId) -> int:
        return sum(1 for factor in self.factors if factor == var)

    def without_one(self, var: VarId) -> "Monomial":
        """``var`` を 1 個だけ取り除いた単項式。含まれない場合は ValueError。"""

        factors = list(self.factors)
        factors.remove(var)
        return Monomial(tuple(factors))

    def grouped(self) -> List[Tuple[VarId, int]]:
        """(変数, 指数) の列。順序は因子の正規順。"""

        groups: List[Tuple[VarId, int]] = []
        for factor in self.factors:
            if groups and groups[-1][0] == factor:
                groups[-1] = (factor, groups[-1][1] + 1)
            else:
                groups.append((factor, 1))
        return groups

    def to_text(self) -> str:
        parts = []
        for var, power in self.grouped():
            parts.append(var.to_text() if power == 1 else f"{var.to_text()}^{power}")
        return "*".join(parts)


_ONE_MONOMIAL = Monomial(())


class Polynomial:
    """係数 0 の項を保持しない多項式。生成後は変更しない。"""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coefficient] | None = None) -> None:
        cleaned: Dict[Monomial, Coefficient] = {}
        if terms:
            for monomial, coefficient in terms.items():
                value = normalize_coefficient(coefficient)
                if value != 0:
                    cleaned[monomial] = value
        self._terms = cleaned
        self._hash: int | None = None

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, value: Coefficient) -> "Polynomial":
        return cls({_ONE_MONOMIAL: value})

    @classmethod
    def variable(cls, var: VarId, coefficient: Coefficient = 1) -> "Polynomial":
        return cls({Monomial((var,)): coefficient})

    @classmethod
    def monomial(cls, monomial: Monomial, coefficient: Coefficient = 1) -> "Polynomial":
        return cls({monomial: coefficient})

    # ---- 参照系 -------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Coefficient]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> List[Tuple[Monomial, Coefficient]]:
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def __iter__(self) -> Iterator[Tuple[Monomial, Coefficient]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(monomial.degree == 0 for monomial in self._terms)

    def constant_value(self) -> Coefficient:
        """定数多項式の値。定数でなければ ValueError。"""

        if not self.is_constant():
            raise ValueError(f"定数ではない多項式です: {self.to_text()}")
        return self._terms.get(_ONE_MONOMIAL, 0)

    def coefficient(self, monomial: Monomial) -> Coefficient:
        return self._terms.get(monomial, 0)

    def degree(self) -> int:
        return max((monomial.degree for monomial in self._terms), default=0)

    def variables(self) -> Tuple[VarId, ...]:
        seen = {factor for monomial in self._terms for factor in monomial.factors}
        return tuple(sorted(seen))

    def is_multilinear(self) -> bool:
        return all(len(set(m.factors)) == len(m.factors) for m in self._terms)

    # ---- 演算 ---------------------------------------------------------
    @staticmethod
    def _coerce(other: object) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        accumulator = dict(self._terms)
        for monomial, coefficient in rhs._terms.items():
            accumulator[monomial] = accumulator.get(monomial, 0) + coefficient
        return Polynomial(accumulator)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({monomial: -c for monomial, c in self._terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Polynomial":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial({m: c * other for m, c in self._terms.items()})
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        accumulator: Dict[Monomial, Coefficient] = {}
        for left, left_coefficient in self._terms.items():
            for right, right_coefficient in rhs._terms.items():
                key = left.times(right)
                accumulator[key] = accumulator.get(key, 0) + left_coefficient * right_coefficient
        return Polynomial(accumulator)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Polynomial":
        if not isinstance(other, (int, Fraction)) or other == 0:
            return NotImplemented
        return Polynomial({m: Fraction(c) / other for m, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ---- 評価・代入 ---------------------------------------------------
    def evaluate(self, assignment: Mapping[VarId, Coefficient]) -> Coefficient:
        """全変数に厳密数を代入した値。未指定の変数があれば InvalidVariableError。"""

        total: Coefficient = 0
        for monomial, coefficient in self._terms.items():
            value: Coefficient = coefficient
            for var, power in monomial.grouped():
                if var not in assignment:
                    raise InvalidVariableError(f"変数 {var} の値が指定されていません")
                value = value * assignment[var] ** power
            total += value
        return normalize_coefficient(total)

    def substitute(self, mapping: Mapping[VarId, "Polynomial"]) -> "Polynomial":
        """変数を多項式で置き換える。``mapping`` にない変数はそのまま残す。"""

        result = Polynomial()
        power_cache: Dict[Tuple[VarId, int], Polynomial] = {}
        for monomial, coefficient in self._terms.items():
            term = Polynomial.constant(coefficient)
            kept: List[VarId] = []
            for var, power in monomial.grouped():
                if var in mapping:
                    key = (var, power)
                    if key not in power_cache:
                        power_cache[key] = mapping[var] ** power
                    term = term * power_cache[key]
                else:
                    kept.extend([var] * power)
            if kept:
                term = term * Polynomial.monomial(Monomial.of(kept))
            result = result + term
        return result

    # ---- 表示 ---------------------------------------------------------
    def to_text(self) -> str:
        """``+1*y[1,2,3]*y[1,4,5] -1*y[1,2,4]*y[1,3,5]`` 形式の正規テキスト。"""

        if not self._terms:
            return "0"
        parts = []
        for monomial, coefficient in self.sorted_terms():
            head = format_coefficient(coefficient)
            parts.append(head if monomial.degree == 0 else f"{head}*{monomial.to_text()}")
        return " ".join(parts)

    def __str__(self) -> str:  # noqa: D401
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


def polynomial_sum(items: Iterable[Polynomial]) -> Polynomial:
    """多数の多項式を 1 回の辞書集計で足し合わせる。"""

    accumulator: Dict[Monomial, Coefficient] = {}
    for item in items:
        for monomial, coefficient in item.terms.items():
            accumulator[monomial] = accumulator.get(monomial, 0) + coefficient
    return Polynomial(accumulator)


__all__ = [
    "Coefficient",
    "Monomial",
    "Polynomial",
    "format_coefficient",
    "normalize_coefficient",
    "polynomial_sum",
]
