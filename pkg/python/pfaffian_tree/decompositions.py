# -*- coding: utf-8 -*-
"""順序付き木分解と対称因子による P_m^2 の係数計算。

m-1 本の 3 辺を持つ 3-グラフを、どちらも全域木となる 2 つの部分 (T, T') に
辺の位置ごとに分ける。符号は昇順 3 つ組の正規順で求めた ε(T)ε(T')。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Tuple

from exactalg import Monomial, normalize_coefficient

from .errors import ThreeGraphInputError
from .pm import triples_of
from .three_graph import ThreeGraph, Triple, epsilon, is_tree3


@dataclass(frozen=True)
class TreeDecomposition:
    first: Tuple[Triple, ...]
    second: Tuple[Triple, ...]
    sign: int


def ordered_tree_decompositions(graph: ThreeGraph) -> List[TreeDecomposition]:
    """辺位置の部分集合ごとに (T, T', ε(T)ε(T')) を列挙する。"""

    m = graph.m
    if m % 2 == 0 or len(graph.edges) != m - 1:
        raise ThreeGraphInputError(
            f"木分解には奇数 m と m-1 本の辺が必要です: m={m}, 辺数={len(graph.edges)}"
        )
    size = (m - 1) // 2
    positions = range(len(graph.edges))
    found: List[TreeDecomposition] = []
    for chosen in combinations(positions, size):
        first = tuple(graph.edges[p] for p in chosen)
        second = tuple(graph.edges[p] for p in positions if p not in chosen)
        if not (is_tree3(ThreeGraph(m, first)) and is_tree3(ThreeGraph(m, second))):
            continue
        sign = epsilon(first, m) * epsilon(second, m)
        found.append(TreeDecomposition(first, second, sign))
    return found


def aut_factor(graph: ThreeGraph) -> int:
    """2^d (d は重複度 2 の辺の数)。"""

    doubled = sum(1 for count in graph.multiplicities().values() if count == 2)
    return 2**doubled


def graph_of_monomial(monomial: Monomial) -> ThreeGraph:
    """m-1 個の y 因子からなる単項式の双対 3-グラフ (m = 次数 + 1)。"""

    triples = triples_of(monomial)
    m = monomial.degree + 1
    return ThreeGraph.of(m, triples)


def coeff_via_decompositions(monomial: Monomial) -> Fraction | int:
    """順序付き木分解の代数的個数を |Aut| で割った値。P_m^2 の係数と一致する。"""

    graph = graph_of_monomial(monomial)
    if graph.m % 2 == 0:
        return 0
    total = sum(item.sign for item in ordered_tree_decompositions(graph))
    return normalize_coefficient(Fraction(total, aut_factor(graph)))


def format_decompositions(graph: ThreeGraph, decompositions: List[TreeDecomposition]) -> str:
    """CLI 向けの表示。最終行に代数的個数・対称因子・係数を出す。"""

    def render(part: Tuple[Triple, ...]) -> str:
        return "*".join(f"y[{a},{b},{c}]" for a, b, c in part)

    lines = [f"{item.sign:+d} T={render(item.first)} T'={render(item.second)}" for item in decompositions]
    total = sum(item.sign for item in decompositions)
    aut = aut_factor(graph)
    coefficient = normalize_coefficient(Fraction(total, aut))
    lines.append(f"count {total:+d} aut {aut} coefficient {coefficient}")
    return "\n".join(lines)


__all__ = [
    "TreeDecomposition",
    "aut_factor",
    "coeff_via_decompositions",
    "format_decompositions",
    "graph_of_monomial",
    "ordered_tree_decompositions",
]
