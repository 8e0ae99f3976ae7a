# -*- coding: utf-8 -*-
"""ラベル付き木の有理係数結合 (普遍 Milnor 不変量 ξ_n の値) と H 型の変数 η。"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from exactalg import VarId, format_coefficient, x_var, y_var

from .errors import DegreeMismatchError, TreeFormatError
from .trees import LabeledTree, canonicalize, strut, wedge

Scalar = Union[int, Fraction]


def _sort_key(tree: LabeledTree) -> tuple:
    return (tree.leaves, tree.to_text())


@dataclass(frozen=True)
class XiElement:
    """次数 ``degree``、ラベル上限 ``m`` の木の形式和。木は AS 正規形で保持する。"""

    degree: int
    m: int
    terms: Mapping[LabeledTree, Fraction] = field(default_factory=dict)

    @classmethod
    def of(
        cls,
        degree: int,
        m: int,
        items: Iterable[Tuple[Scalar, LabeledTree]],
    ) -> "XiElement":
        accumulator: Dict[LabeledTree, Fraction] = {}
        for coefficient, tree in items:
            if tree.degree != degree:
                raise DegreeMismatchError(f"次数 {degree} の ξ に次数 {tree.degree} の木 {tree} は含められません")
            if tree.max_label > m:
                raise TreeFormatError(f"木 {tree} のラベルが上限 m={m} を超えています")
            canonical, sign = canonicalize(tree)
            if canonical is None:
                continue
            value = accumulator.get(canonical, Fraction(0)) + sign * Fraction(coefficient)
            if value == 0:
                accumulator.pop(canonical, None)
            else:
                accumulator[canonical] = value
        return cls(degree, m, accumulator)

    @classmethod
    def zero(cls, degree: int, m: int) -> "XiElement":
        return cls(degree, m, {})

    @classmethod
    def from_struts(cls, m: int, values: Mapping[Tuple[int, int], Scalar]) -> "XiElement":
        """(i, j) → ℓ_ij から次数 1 の ξ を作る。"""

        return cls.of(1, m, ((value, strut(i, j)) for (i, j), value in values.items()))

    @classmethod
    def from_wedges(cls, m: int, values: Mapping[Tuple[int, int, int], Scalar]) -> "XiElement":
        """(i, j, k) → μ_ijk から次数 2 の ξ を作る。"""

        return cls.of(2, m, ((value, wedge(i, j, k)) for (i, j, k), value in values.items()))

    def coefficient(self, tree: LabeledTree) -> Fraction:
        canonical, sign = canonicalize(tree)
        if canonical is None:
            return Fraction(0)
        return sign * self.terms.get(canonical, Fraction(0))

    def items(self) -> Iterator[Tuple[Fraction, LabeledTree]]:
        for tree in sorted(self.terms, key=_sort_key):
            yield self.terms[tree], tree

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "XiElement") -> None:
        if self.degree != other.degree:
            raise DegreeMismatchError(f"次数 {self.degree} と {other.degree} の ξ は足せません")

    def __add__(self, other: "XiElement") -> "XiElement":
        self._check_compatible(other)
        m = max(self.m, other.m)
        return XiElement.of(self.degree, m, [*self.items(), *other.items()])

    def __neg__(self) -> "XiElement":
        return self.scale(-1)

    def __sub__(self, other: "XiElement") -> "XiElement":
        return self + (-other)

    def scale(self, factor: Scalar) -> "XiElement":
        if factor == 0:
            return XiElement.zero(self.degree, self.m)
        return XiElement(self.degree, self.m, {tree: value * factor for tree, value in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XiElement):
            return NotImplemented
        return self.degree == other.degree and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self.terms.items())))

    # ---- 座標 -----------------------------------------------------------
    def strut_coordinates(self, include_diagonal: bool = False) -> Dict[Tuple[int, int], Fraction]:
        """次数 1 の座標 ℓ_ij (i < j)。``include_diagonal`` で (i, i) も含める。"""

        if self.degree != 1:
            raise DegreeMismatchError(f"strut 座標は次数 1 のみです: degree={self.degree}")
        result: Dict[Tuple[int, int], Fraction] = {}
        for value, tree in self.items():
            i, j = tree.leaves
            if i == j and not include_diagonal:
                continue
            result[(i, j)] = value
        return result

    def wedge_coordinates(self) -> Dict[Tuple[int, int, int], Fraction]:
        """次数 2 の座標 μ_ijk (i < j < k)。"""

        if self.degree != 2:
            raise DegreeMismatchError(f"wedge 座標は次数 2 のみです: degree={self.degree}")
        result: Dict[Tuple[int, int, int], Fraction] = {}
        for value, tree in self.items():
            i, j, k = tree.leaves
            result[(i, j, k)] = value
        return result

    def as_assignment(self) -> Dict[VarId, Fraction]:
        """次数 1 なら x[i,j]、次数 2 なら y[i,j,k] への代入。"""

        if self.degree == 1:
            values = self.strut_coordinates()
            return {x_var(i, j): values.get((i, j), Fraction(0)) for i, j in combinations(range(1, self.m + 1), 2)}
        if self.degree == 2:
            wedges = self.wedge_coordinates()
            return {
                y_var(*triple): wedges.get(triple, Fraction(0))
                for triple in combinations(range(1, self.m + 1), 3)
            }
        raise DegreeMismatchError(f"多項式変数への代入は次数 1, 2 のみです: degree={self.degree}")

    def to_lines(self) -> List[str]:
        return [f"tree {self.degree} {tree.to_text()} * {format_coefficient(value)}" for value, tree in self.items()]

    def __repr__(self) -> str:
        body = " ".join(f"{format_coefficient(v)}*<{t}>" for v, t in self.items()) or "0"
        return f"XiElement(degree={self.degree}, m={self.m}, {body})"


@dataclass(frozen=True)
class EtaVar:
    """H 型の次数 3 図式 ⁱ_ℓH^k_j。左の頂点が (辺, ℓ, i)、右の頂点が (辺, j, k)。"""

    l: int  # noqa: E741
    i: int
    k: int
    j: int

    @property
    def tree(self) -> LabeledTree:
        return LabeledTree(self.l, (self.i, (self.j, self.k)))

    def canonical(self) -> Tuple[LabeledTree | None, int]:
        return canonicalize(self.tree)

    def to_text(self) -> str:
        return f"eta[{self.l},{self.i},{self.k},{self.j}]"


__all__ = ["EtaVar", "Scalar", "XiElement"]
