# -*- coding: utf-8 -*-
"""多項式成分の正方行列と、その行列式・パフィアン。

行列式は次数 6 以下または記号成分を含む場合に余因子展開 (列部分集合でメモ化、除算なし)、
整数成分で次数 7 以上の場合に Bareiss の分数なし消去法で計算する。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from .errors import MatrixIndexError, NotSkewSymmetricError
from .polynomial import Coefficient, Polynomial
from .variables import VarId

Entry = Union[Polynomial, int, Fraction]

_COFACTOR_LIMIT = 6


def _as_polynomial(value: Entry) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


@dataclass(frozen=True)
class ExactMatrix:
    """成分を Polynomial で保持する正方行列。添字は 0 始まり。"""

    rows: Tuple[Tuple[Polynomial, ...], ...]

    def __post_init__(self) -> None:
        size = len(self.rows)
        for row in self.rows:
            if len(row) != size:
                raise MatrixIndexError(f"正方行列ではありません: {size} 行に長さ {len(row)} の行があります")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Entry]]) -> "ExactMatrix":
        return cls(tuple(tuple(_as_polynomial(value) for value in row) for row in rows))

    @classmethod
    def from_function(cls, size: int, entry: Callable[[int, int], Entry]) -> "ExactMatrix":
        return cls.from_rows([[entry(i, j) for j in range(size)] for i in range(size)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Polynomial:
        return self.rows[i][j]

    def minor(self, p: int) -> "ExactMatrix":
        """p 行 p 列 (1 始まり) を取り除いた行列。"""

        if not 1 <= p <= self.dim:
            raise MatrixIndexError(f"削除する行番号 {p} が範囲 1..{self.dim} の外にあります")
        keep = [index for index in range(self.dim) if index != p - 1]
        return ExactMatrix(tuple(tuple(self.rows[i][j] for j in keep) for i in keep))

    def is_skew(self) -> bool:
        for i in range(self.dim):
            if not self.rows[i][i].is_zero():
                return False
            for j in range(i + 1, self.dim):
                if self.rows[i][j] != -self.rows[j][i]:
                    return False
        return True

    def is_constant(self) -> bool:
        return all(value.is_constant() for row in self.rows for value in row)

    def row_sums(self) -> List[Polynomial]:
        sums = []
        for row in self.rows:
            total = Polynomial()
            for value in row:
                total = total + value
            sums.append(total)
        return sums

    def evaluate(self, assignment: Mapping[VarId, Coefficient]) -> "ExactMatrix":
        return ExactMatrix.from_rows(
            [[value.evaluate(assignment) for value in row] for row in self.rows]
        )

    def to_lists(self) -> List[List[str]]:
        return [[value.to_text() for value in row] for row in self.rows]


def _det_cofactor(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    size = len(rows)
    if size == 0:
        return Polynomial.constant(1)

    @lru_cache(maxsize=None)
    def expand(row: int, columns: Tuple[int, ...]) -> Polynomial:
        if row == size:
            return Polynomial.constant(1)
        total = Polynomial()
        for position, column in enumerate(columns):
            value = rows[row][column]
            if value.is_zero():
                continue
            rest = columns[:position] + columns[position + 1 :]
            term = value * expand(row + 1, rest)
            total = total + term if position % 2 == 0 else total - term
        return total

    return expand(0, tuple(range(size)))


def _det_bareiss(values: List[List[Coefficient]]) -> Coefficient:
    matrix = [list(row) for row in values]
    size = len(matrix)
    sign = 1
    previous: Coefficient = 1
    for k in range(size - 1):
        if matrix[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if matrix[r][k] != 0), None)
            if swap is None:
                return 0
            matrix[k], matrix[swap] = matrix[swap], matrix[k]
            sign = -sign
        pivot = matrix[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                numerator = matrix[i][j] * pivot - matrix[i][k] * matrix[k][j]
                # 整数成分では割り切れる
                if isinstance(numerator, int) and isinstance(previous, int):
                    matrix[i][j] = numerator // previous
                else:
                    matrix[i][j] = Fraction(numerator) / previous
            matrix[i][k] = 0
        previous = pivot
    return sign * matrix[size - 1][size - 1]


def det_exact(matrix: ExactMatrix) -> Polynomial:
    """厳密な行列式。"""

    if matrix.dim > _COFACTOR_LIMIT and matrix.is_constant():
        values = [[value.constant_value() for value in row] for row in matrix.rows]
        return Polynomial.constant(_det_bareiss(values))
    return _det_cofactor(matrix.rows)


def pfaffian(matrix: ExactMatrix) -> Polynomial:
    """第 1 行展開によるパフィアン。交代行列かつ偶数次元でなければ例外。"""

    if matrix.dim % 2 != 0:
        raise NotSkewSymmetricError(f"奇数次元 ({matrix.dim}) の行列のパフィアンは定義されません")
    if not matrix.is_skew():
        raise NotSkewSymmetricError("交代行列ではありません")

    memo: Dict[Tuple[int, ...], Polynomial] = {}

    def expand(indices: Tuple[int, ...]) -> Polynomial:
        if not indices:
            return Polynomial.constant(1)
        if indices in memo:
            return memo[indices]
        head = indices[0]
        total = Polynomial()
        for position in range(1, len(indices)):
            value = matrix.entry(head, indices[position])
            if value.is_zero():
                continue
            rest = indices[1:position] + indices[position + 1 :]
            term = value * expand(rest)
            total = total + term if position % 2 == 1 else total - term
        memo[indices] = total
        return total

    return expand(tuple(range(matrix.dim)))


__all__ = ["Entry", "ExactMatrix", "det_exact", "pfaffian"]
