# -*- coding: utf-8 -*-
"""重み系から定まる多項式 F̃_m^(n), F_m^(n), G_m^(n)。

F̃ は m-1 個の ξ の持ち上げに W を適用した多重線形形式で、F(ξ) = F̃(ξ,…,ξ)/(m-1)!。
G は次数 n の ξ を m-2 個と次数 n+1 の木 1 個から同様に作る。
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from diagrams import Engine, weight
from exactalg import Coefficient, Monomial, Polynomial, VarId, normalize_coefficient, x_var, y_var
from utils import log_structured_event, setup_logger

from .errors import DegreeMismatchError, UnsupportedAssemblyError
from .lift import lift_to_circles
from .trees import LabeledTree, strut, wedge
from .xi import XiElement

logger = setup_logger("milnor.fpoly")


def _covers(trees: Sequence[LabeledTree], m: int) -> bool:
    labels = {label for tree in trees for label in tree.leaves}
    return len(labels) == m


def multilinear_weight(
    factors: Sequence[XiElement],
    m: int,
    *,
    engine: Engine = "reduced",
    seed: Optional[int] = None,
) -> Fraction:
    """各因子から 1 項ずつ選んだ木の族の持ち上げに W を適用し、係数の積で重み付けた和。"""

    total = Fraction(0)
    for combination in product(*(list(factor.items()) for factor in factors)):
        coefficient = Fraction(1)
        for value, _ in combination:
            coefficient *= value
        trees = [tree for _, tree in combination]
        # 脚のない円周が残る持ち上げは m >= 2 で重み 0
        if m >= 2 and not _covers(trees, m):
            continue
        total += coefficient * weight(lift_to_circles(trees, m, seed), engine)
    return total


def F_tilde(
    xi_list: Sequence[XiElement],
    m: int,
    *,
    engine: Engine = "reduced",
    seed: Optional[int] = None,
) -> Fraction:
    """F̃_m^(n)(ξ_1, …, ξ_{m-1}) = W_{n(m-1)}(持ち上げ)。"""

    if m < 2:
        raise DegreeMismatchError(f"m は 2 以上である必要があります: m={m}")
    if len(xi_list) != m - 1:
        raise DegreeMismatchError(f"F̃_{m} には {m - 1} 個の ξ が必要です: {len(xi_list)} 個")
    degrees = {xi.degree for xi in xi_list}
    if len(degrees) != 1:
        raise DegreeMismatchError(f"ξ の次数が揃っていません: {sorted(degrees)}")
    return multilinear_weight(xi_list, m, engine=engine, seed=seed)


def F(xi: XiElement, m: int, *, engine: Engine = "reduced", seed: Optional[int] = None) -> Fraction:
    """F_m^(n)(ξ) = F̃(ξ, …, ξ)/(m-1)!。"""

    return F_tilde([xi] * (m - 1), m, engine=engine, seed=seed) / factorial(m - 1)


def _basis(n: int, m: int) -> List[Tuple[VarId, LabeledTree]]:
    if n == 1:
        return [(x_var(i, j), strut(i, j)) for i, j in combinations(range(1, m + 1), 2)]
    if n == 2:
        return [(y_var(i, j, k), wedge(i, j, k)) for i, j, k in combinations(range(1, m + 1), 3)]
    raise UnsupportedAssemblyError(f"多項式としての組み立ては n = 1, 2 のみ対応します: n={n}")


def F_as_polynomial(n: int, m: int, *, engine: Engine = "reduced") -> Polynomial:
    """F_m^(n) を x[i,j] (n=1) または y[i,j,k] (n=2) の多項式として組み立てる。

    基底の多重集合ごとに F̃ を 1 回だけ評価し、単項式 Π v_b^{c_b} の係数を
    F̃ / Π c_b! とする。
    """

    if m < 2:
        raise UnsupportedAssemblyError(f"m は 2 以上である必要があります: m={m}")
    if m > 5:
        raise UnsupportedAssemblyError(f"多項式としての組み立ては m <= 5 のみ対応します: m={m}")
    basis = _basis(n, m)
    terms: Dict[Monomial, Coefficient] = {}
    evaluated = 0
    for chosen in combinations_with_replacement(range(len(basis)), m - 1):
        trees = [basis[index][1] for index in chosen]
        if not _covers(trees, m):
            continue
        evaluated += 1
        value = weight(lift_to_circles(trees, m), engine)
        if value == 0:
            continue
        denominator = 1
        for index in set(chosen):
            denominator *= factorial(chosen.count(index))
        monomial = Monomial.of(basis[index][0] for index in chosen)
        terms[monomial] = normalize_coefficient(Fraction(value) / denominator)
    log_structured_event(
        logger,
        "F polynomial assembled",
        level=logging.DEBUG,
        check_name="fpoly",
        event_level="progress",
        context={"n": n, "m": m, "evaluated": evaluated, "terms": len(terms)},
    )
    return Polynomial(terms)


def G_eval(
    xi_list: Sequence[XiElement],
    tau: XiElement,
    m: int,
    *,
    engine: Engine = "reduced",
    seed: Optional[int] = None,
) -> Fraction:
    """m-2 個の次数 n の ξ と次数 n+1 の τ の持ち上げに W を適用した多重線形値。"""

    if m < 2:
        raise DegreeMismatchError(f"m は 2 以上である必要があります: m={m}")
    if len(xi_list) != m - 2:
        raise DegreeMismatchError(f"G_{m} には {m - 2} 個の ξ が必要です: {len(xi_list)} 個")
    degrees = {xi.degree for xi in xi_list}
    if len(degrees) > 1:
        raise DegreeMismatchError(f"ξ の次数が揃っていません: {sorted(degrees)}")
    if degrees and tau.degree != next(iter(degrees)) + 1:
        raise DegreeMismatchError(f"τ の次数 {tau.degree} は ξ の次数 + 1 である必要があります")
    return multilinear_weight([*xi_list, tau], m, engine=engine, seed=seed)


def G_value(
    xi: XiElement,
    tau: XiElement,
    m: int,
    *,
    engine: Engine = "reduced",
    seed: Optional[int] = None,
) -> Fraction:
    """G_m^(n)(ξ, τ) = G_eval(ξ, …, ξ; τ)/(m-2)!。"""

    return G_eval([xi] * (m - 2), tau, m, engine=engine, seed=seed) / factorial(m - 2)


__all__ = ["F", "F_as_polynomial", "F_tilde", "G_eval", "G_value", "multilinear_weight"]
