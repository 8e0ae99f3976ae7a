# -*- coding: utf-8 -*-
"""完全グラフ K_m の全域木の列挙。

本体は Prüfer 列の復号による全単射列挙で、networkx による部分集合総当たりを
テスト用の独立な照合手段として併せて提供する。
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations, product
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from .errors import GraphInputError

Edge = Tuple[int, int]


def _normalize_edge(i: int, j: int) -> Edge:
    if i == j:
        raise GraphInputError(f"自己ループは辺として扱えません: ({i},{j})")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class EdgeSet:
    """頂点 {1..m} 上の無向辺の集合。"""

    m: int
    edges: FrozenSet[Edge]

    @classmethod
    def of(cls, m: int, edges: Iterable[Tuple[int, int]]) -> "EdgeSet":
        normalized = frozenset(_normalize_edge(i, j) for i, j in edges)
        for i, j in normalized:
            if not (1 <= i <= m and 1 <= j <= m):
                raise GraphInputError(f"辺 ({i},{j}) が頂点範囲 1..{m} の外にあります")
        return cls(m, normalized)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def to_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.m + 1))
        graph.add_edges_from(self.edges)
        return graph

    def is_spanning_tree(self) -> bool:
        """連結・非輪状・全頂点被覆・辺数 m-1 を満たすか。"""

        if len(self.edges) != self.m - 1:
            return False
        return nx.is_tree(self.to_graph())


def prufer_decode(sequence: Sequence[int], m: int) -> EdgeSet:
    """長さ m-2 の Prüfer 列を K_m の全域木に復号する。"""

    if len(sequence) != m - 2:
        raise GraphInputError(f"Prüfer 列の長さ {len(sequence)} が m-2={m - 2} と一致しません")
    degree = [1] * (m + 1)
    for label in sequence:
        if not 1 <= label <= m:
            raise GraphInputError(f"Prüfer 列の値 {label} が範囲 1..{m} の外にあります")
        degree[label] += 1

    leaves = [vertex for vertex in range(1, m + 1) if degree[vertex] == 1]
    heapq.heapify(leaves)
    edges: List[Edge] = []
    for label in sequence:
        leaf = heapq.heappop(leaves)
        edges.append(_normalize_edge(leaf, label))
        degree[label] -= 1
        if degree[label] == 1:
            heapq.heappush(leaves, label)
    last_two = sorted(leaves)
    edges.append(_normalize_edge(last_two[0], last_two[1]))
    return EdgeSet(m, frozenset(edges))


def _check_vertex_count(m: int) -> None:
    if m < 2:
        raise GraphInputError(f"頂点数は 2 以上である必要があります: m={m}")


def spanning_trees_complete(m: int) -> List[EdgeSet]:
    """K_m の全域木を重複なく列挙する。出力は辺列の辞書順。"""

    _check_vertex_count(m)
    if m == 2:
        return [EdgeSet(2, frozenset({(1, 2)}))]
    trees = [prufer_decode(sequence, m) for sequence in product(range(1, m + 1), repeat=m - 2)]
    return sorted(trees, key=EdgeSet.sorted_edges)


def spanning_trees_brute_force(m: int) -> List[EdgeSet]:
    """辺部分集合の総当たりで全域木を求める照合用実装 (m <= 5 を想定)。"""

    _check_vertex_count(m)
    all_edges = list(combinations(range(1, m + 1), 2))
    found = []
    for subset in combinations(all_edges, m - 1):
        candidate = EdgeSet(m, frozenset(subset))
        if candidate.is_spanning_tree():
            found.append(candidate)
    return sorted(found, key=EdgeSet.sorted_edges)


__all__ = [
    "Edge",
    "EdgeSet",
    "prufer_decode",
    "spanning_trees_brute_force",
    "spanning_trees_complete",
]
