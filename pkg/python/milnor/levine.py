# -*- coding: utf-8 -*-
"""長さ n+1 の Milnor 数から作る行列 Λ の簡約行列式 (Levine-Traldi の公式)。"""

from __future__ import annotations

from itertools import product
from typing import Mapping, Tuple

from exactalg import Coefficient, ExactMatrix, det_exact

from .errors import DegreeMismatchError

MuTableData = Mapping[Tuple[int, ...], int]


def levine_traldi_matrix(n: int, m: int, table: MuTableData) -> ExactMatrix:
    """λ_ij = Σ_{r_1..r_{n-1}} μ_{r_1,…,r_{n-1},j,i}。表にない値は 0。対角も同じ式で埋める。"""

    if n < 1 or m < 2:
        raise DegreeMismatchError(f"n >= 1, m >= 2 が必要です: n={n}, m={m}")
    for key in table:
        if len(key) != n + 1:
            raise DegreeMismatchError(f"μ の添字列 {key} の長さが n+1={n + 1} ではありません")
    prefixes = list(product(range(1, m + 1), repeat=n - 1))

    def entry(row: int, column: int) -> int:
        i, j = row + 1, column + 1
        return sum(table.get((*prefix, j, i), 0) for prefix in prefixes)

    return ExactMatrix.from_function(m, entry)


def levine_traldi_det(n: int, m: int, table: MuTableData, p: int = 1) -> Coefficient:
    """Λ から p 行 p 列 (1 始まり) を除いた行列式。"""

    return det_exact(levine_traldi_matrix(n, m, table).minor(p)).constant_value()


__all__ = ["MuTableData", "levine_traldi_det", "levine_traldi_matrix"]
