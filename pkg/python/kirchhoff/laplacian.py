# -*- coding: utf-8 -*-
"""Kirchhoff 多項式 D_m と連結数ラプラシアン、行列木定理の照合。"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Mapping, Sequence, Tuple

from exactalg import (
    Coefficient,
    ExactMatrix,
    Monomial,
    Polynomial,
    VarId,
    det_exact,
    x_var,
)
from utils import log_structured_event, setup_logger

from .errors import GraphInputError
from .trees import spanning_trees_complete

logger = setup_logger("kirchhoff")


@dataclass(frozen=True)
class LinkingMatrix:
    """対角 0 の対称行列 ℓ。成分は整数または多項式。"""

    m: int
    rows: Tuple[Tuple[Polynomial, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.m or any(len(row) != self.m for row in self.rows):
            raise GraphInputError(f"連結数行列は {self.m}x{self.m} である必要があります")
        for i in range(self.m):
            if not self.rows[i][i].is_zero():
                raise GraphInputError(f"連結数行列の対角成分 ({i + 1},{i + 1}) が 0 ではありません")
            for j in range(i + 1, self.m):
                if self.rows[i][j] != self.rows[j][i]:
                    raise GraphInputError(f"連結数行列が ({i + 1},{j + 1}) で対称ではありません")

    @classmethod
    def from_integers(cls, rows: Sequence[Sequence[int]]) -> "LinkingMatrix":
        return cls(len(rows), tuple(tuple(Polynomial.constant(v) for v in row) for row in rows))

    @classmethod
    def from_pairs(cls, m: int, values: Mapping[Tuple[int, int], int]) -> "LinkingMatrix":
        """{(i, j): ℓ_ij} (1 始まり) から組み立てる。未指定の組は 0。"""

        grid = [[0] * m for _ in range(m)]
        for (i, j), value in values.items():
            grid[i - 1][j - 1] = value
            grid[j - 1][i - 1] = value
        return cls.from_integers(grid)

    @classmethod
    def symbolic(cls, m: int) -> "LinkingMatrix":
        """ℓ_ij = x[i,j] とした記号行列。"""

        def entry(i: int, j: int) -> Polynomial:
            return Polynomial() if i == j else Polynomial.variable(x_var(i + 1, j + 1))

        return cls(m, tuple(tuple(entry(i, j) for j in range(m)) for i in range(m)))

    def entry(self, i: int, j: int) -> Polynomial:
        """1 始まりの添字で ℓ_ij を返す。"""

        return self.rows[i - 1][j - 1]

    def as_assignment(self) -> Dict[VarId, Coefficient]:
        """x[i,j] へ ℓ_ij を代入する割り当て。整数行列専用。"""

        return {
            x_var(i, j): self.entry(i, j).constant_value()
            for i in range(1, self.m + 1)
            for j in range(i + 1, self.m + 1)
        }


@lru_cache(maxsize=None)
def kirchhoff_poly(m: int) -> Polynomial:
    """D_m = Σ_T Π_{ij∈T} x[i,j]。"""

    terms: Dict[Monomial, Coefficient] = {}
    for tree in spanning_trees_complete(m):
        terms[Monomial.of(x_var(i, j) for i, j in tree.edges)] = 1
    return Polynomial(terms)


def kirchhoff_value(linking: LinkingMatrix) -> Coefficient:
    """整数連結数行列での D_m の値。"""

    if linking.m < 2:
        raise GraphInputError(f"頂点数は 2 以上である必要があります: m={linking.m}")
    return kirchhoff_poly(linking.m).evaluate(linking.as_assignment())


def laplacian_linking(linking: LinkingMatrix) -> ExactMatrix:
    """λ_ij = -ℓ_ij (i≠j), λ_ii = Σ_{k≠i} ℓ_ik。"""

    def entry(i: int, j: int) -> Polynomial:
        if i != j:
            return -linking.rows[i][j]
        total = Polynomial()
        for k in range(linking.m):
            if k != i:
                total = total + linking.rows[i][k]
        return total

    return ExactMatrix.from_function(linking.m, entry)


def reduced_det(laplacian: ExactMatrix, p: int) -> Polynomial:
    """p 行 p 列 (1 始まり) を除いた小行列式。"""

    return det_exact(laplacian.minor(p))


def mtt_check(m: int) -> bool:
    """記号的に D_m と全ての p に対する簡約行列式が一致するか確かめる。"""

    expected = kirchhoff_poly(m)
    laplacian = laplacian_linking(LinkingMatrix.symbolic(m))
    mismatched = [p for p in range(1, m + 1) if reduced_det(laplacian, p) != expected]
    if mismatched:
        log_structured_event(
            logger,
            "matrix-tree identity failed",
            level=logging.WARNING,
            check_name="mtt",
            event_level="violation",
            context={"m": m, "rows": mismatched},
        )
        return False
    log_structured_event(
        logger,
        "matrix-tree identity verified",
        check_name="mtt",
        event_level="progress",
        context={"m": m, "terms": len(expected)},
    )
    return True


__all__ = [
    "LinkingMatrix",
    "kirchhoff_poly",
    "kirchhoff_value",
    "laplacian_linking",
    "mtt_check",
    "reduced_det",
]
