# -*- coding: utf-8 -*-
"""完全 3-グラフ Γ_m の部分グラフ、全域木判定、符号 ε(T)。

3 辺 (i j k) は頂点 i, j, k に脚を持つ Y 字として 1 次元複体に貼り合わせる。
全域木は「連結・単連結・全頂点被覆」。判定は接続グラフ (networkx) と
3-巡回置換の積が m-巡回置換になるかの 2 通りで行い、両者の一致を確かめる。
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .errors import ThreeGraphInputError, TreeCriterionError

Triple = Tuple[int, int, int]


def normalize_triple(triple: Sequence[int]) -> Triple:
    if len(triple) != 3 or len(set(triple)) != 3:
        raise ThreeGraphInputError(f"3 辺の頂点は相異なる 3 個である必要があります: {tuple(triple)}")
    a, b, c = sorted(triple)
    return (a, b, c)


@dataclass(frozen=True)
class ThreeGraph:
    """頂点 {1..m} 上の 3 辺の多重集合。辺は昇順の 3 つ組で、正規順に並べて保持する。"""

    m: int
    edges: Tuple[Triple, ...]

    @classmethod
    def of(cls, m: int, triples: Iterable[Sequence[int]]) -> "ThreeGraph":
        edges = sorted(normalize_triple(t) for t in triples)
        for edge in edges:
            if edge[0] < 1 or edge[2] > m:
                raise ThreeGraphInputError(f"3 辺 {edge} が頂点範囲 1..{m} の外にあります")
        return cls(m, tuple(edges))

    def multiplicities(self) -> Dict[Triple, int]:
        counts: Dict[Triple, int] = {}
        for edge in self.edges:
            counts[edge] = counts.get(edge, 0) + 1
        return counts

    def incidence_graph(self) -> nx.Graph:
        """頂点ノード ("v", i) と辺ノード ("e", 位置) からなる二部グラフ。"""

        graph = nx.Graph()
        graph.add_nodes_from(("v", vertex) for vertex in range(1, self.m + 1))
        for position, edge in enumerate(self.edges):
            for vertex in edge:
                graph.add_edge(("e", position), ("v", vertex))
        return graph


def _compose_cycles(triples: Sequence[Triple], m: int) -> List[int]:
    """3-巡回置換の積 σ_1 σ_2 … σ_d (右から作用) を 1 始まりの写像表で返す。"""

    mapping = list(range(m + 1))
    for triple in reversed(triples):
        a, b, c = triple
        cycle = {a: b, b: c, c: a}
        mapping = [cycle.get(value, value) for value in mapping]
    return mapping


def _cycle_from_one(mapping: Sequence[int], m: int) -> Optional[List[int]]:
    """1 を含む巡回を (1, π(1), π²(1), …) として返す。m-巡回でなければ None。"""

    sequence = [1]
    current = mapping[1]
    while current != 1:
        sequence.append(current)
        current = mapping[current]
    return sequence if len(sequence) == m else None


def _sign_of_sequence(sequence: Sequence[int]) -> int:
    inversions = 0
    for i in range(len(sequence)):
        for j in range(i + 1, len(sequence)):
            if sequence[i] > sequence[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def _is_tree_by_incidence(graph: ThreeGraph) -> bool:
    return nx.is_tree(graph.incidence_graph())


def _is_tree_by_cycle(graph: ThreeGraph) -> bool:
    if 2 * len(graph.edges) != graph.m - 1:
        return False
    return _cycle_from_one(_compose_cycles(graph.edges, graph.m), graph.m) is not None


def is_tree3(graph: ThreeGraph) -> bool:
    """全域木判定。2 つの判定が一致しない場合は TreeCriterionError。"""

    by_incidence = _is_tree_by_incidence(graph)
    by_cycle = _is_tree_by_cycle(graph)
    if by_incidence != by_cycle:
        raise TreeCriterionError(
            f"木判定が一致しません: 接続グラフ={by_incidence}, 巡回置換={by_cycle}, 辺={graph.edges}"
        )
    return by_incidence


def epsilon(triples: Sequence[Sequence[int]], m: int) -> int:
    """ε(T)。3-巡回置換を並び順に掛け、m-巡回 (s(1) … s(m)) なら s の符号、そうでなければ 0。"""

    ordered = [tuple(t) for t in triples]
    for triple in ordered:
        if len(triple) != 3 or len(set(triple)) != 3 or min(triple) < 1 or max(triple) > m:
            raise ThreeGraphInputError(f"不正な 3 辺です: {triple} (m={m})")
    if m < 1:
        return 0
    sequence = _cycle_from_one(_compose_cycles(ordered, m), m)  # type: ignore[arg-type]
    if sequence is None:
        return 0
    return _sign_of_sequence(sequence)


def parse_three_graph(text: str) -> ThreeGraph:
    """1 行 1 辺 ``i j k`` の 3-グラフ表記を読む。

    ``#`` 以降はコメント。``vertices M`` 行で頂点数を明示でき、省略時は最大の頂点番号。
    同じ辺を複数行書くと多重辺になる。
    """

    triples: List[Triple] = []
    declared: Optional[int] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if len(parts) != 2 or not parts[1].isdigit():
                raise ThreeGraphInputError(f"{number} 行目: 'vertices M' の形式ではありません: '{raw}'")
            declared = int(parts[1])
            continue
        if len(parts) != 3:
            raise ThreeGraphInputError(f"{number} 行目: 3 個の頂点番号が必要です: '{raw}'")
        if not all(p.lstrip("-").isdigit() for p in parts):
            raise ThreeGraphInputError(f"{number} 行目: 整数として解釈できません: '{raw}'")
        try:
            triples.append(normalize_triple([int(p) for p in parts]))
        except ThreeGraphInputError as exc:
            raise ThreeGraphInputError(f"{number} 行目: {exc}") from exc
    if not triples:
        raise ThreeGraphInputError("3 辺が 1 つも含まれていません")
    m = declared if declared is not None else max(t[2] for t in triples)
    return ThreeGraph.of(m, triples)


def read_three_graph(path: Union[str, Path]) -> ThreeGraph:
    return parse_three_graph(Path(path).read_text(encoding="utf-8"))


__all__ = [
    "ThreeGraph",
    "Triple",
    "epsilon",
    "is_tree3",
    "normalize_triple",
    "parse_three_graph",
    "read_three_graph",
]
