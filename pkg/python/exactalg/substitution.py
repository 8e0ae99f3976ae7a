# -*- coding: utf-8 -*-
"""漸化式の検証で使う多項式操作 (偏微分・添字消去・基底の合併)。"""

from __future__ import annotations

from typing import Dict, Mapping, Tuple

from .errors import InvalidVariableError
from .polynomial import Coefficient, Monomial, Polynomial
from .variables import VarId, y_canon

IndexCombination = Mapping[int, int]


def partial_derivative(poly: Polynomial, var: VarId) -> Polynomial:
    """形式的偏微分。重複因子は指数倍で扱う。"""

    accumulator: Dict[Monomial, Coefficient] = {}
    for monomial, coefficient in poly.terms.items():
        power = monomial.multiplicity(var)
        if power == 0:
            continue
        reduced = monomial.without_one(var)
        accumulator[reduced] = accumulator.get(reduced, 0) + coefficient * power
    return Polynomial(accumulator)


def kill_index(poly: Polynomial, index: int) -> Polynomial:
    """添字 ``index`` を含む変数を持つ単項式をすべて捨てる (v_index = 0)。"""

    return Polynomial(
        {
            monomial: coefficient
            for monomial, coefficient in poly.terms.items()
            if all(index not in factor.indices for factor in monomial.factors)
        }
    )


def _expand_y(var: VarId, substitution: Mapping[int, IndexCombination]) -> Polynomial:
    def image(index: int) -> Tuple[Tuple[int, int], ...]:
        combination = substitution.get(index)
        if combination is None:
            return ((index, 1),)
        return tuple((target, weight) for target, weight in combination.items() if weight)

    i, j, k = var.indices
    accumulator: Dict[Monomial, Coefficient] = {}
    for a, wa in image(i):
        for b, wb in image(j):
            for c, wc in image(k):
                canonical, sign = y_canon(a, b, c)
                if canonical is None:
                    continue
                key = Monomial((canonical,))
                accumulator[key] = accumulator.get(key, 0) + sign * wa * wb * wc
    return Polynomial(accumulator)


def merge_basis(poly: Polynomial, substitution: Mapping[int, IndexCombination]) -> Polynomial:
    """基底ベクトルの置換 v_i -> Σ w·v_j を y 変数へ多重線形に展開する。

    ``substitution`` にない添字は自分自身へ写る。x 変数を含む多項式は対象外。
    """

    images: Dict[VarId, Polynomial] = {}
    for var in poly.variables():
        if var.kind != "y":
            raise InvalidVariableError(f"merge_basis は y 変数のみを扱います: {var}")
        images[var] = _expand_y(var, substitution)
    return poly.substitute(images)


def relabel(poly: Polynomial, permutation: Mapping[int, int]) -> Polynomial:
    """添字の付け替え。y 変数は符号付きで正規化される。"""

    return merge_basis(poly, {source: {target: 1} for source, target in permutation.items()})


__all__ = ["IndexCombination", "kill_index", "merge_basis", "partial_derivative", "relabel"]
