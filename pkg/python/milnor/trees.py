# -*- coding: utf-8 -*-
"""ラベル付き uni-trivalent 木。

文字列表現は ``根の葉ラベル:本体`` で、本体は葉ラベルか ``[左,右]``。
三価頂点の巡回順は (親, 左, 右)。例えば ``1:[2,3]`` は巡回順 (1,2,3) の Y、
``1:2`` は 1 と 2 を結ぶ strut。

AS 関係 (頂点の巡回順の反転で符号反転) による正規化は ``canonicalize`` が行い、
最小ラベルの葉を根とし、各頂点で子を辞書順に並べた代表元と符号を返す。
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .errors import TreeFormatError

Body = Union[int, Tuple["Body", "Body"]]


def _body_leaves(body: Body) -> List[int]:
    if isinstance(body, int):
        return [body]
    return _body_leaves(body[0]) + _body_leaves(body[1])


def _body_text(body: Body) -> str:
    if isinstance(body, int):
        return str(body)
    return f"[{_body_text(body[0])},{_body_text(body[1])}]"


@dataclass(frozen=True)
class LabeledTree:
    """根の葉ラベル ``root`` と二分木の本体 ``body`` で表した木。"""

    root: int
    body: Body

    def __post_init__(self) -> None:
        for label in self.leaves:
            if not isinstance(label, int) or label < 1:
                raise TreeFormatError(f"葉ラベルは正の整数である必要があります: {label!r}")

    @property
    def leaves(self) -> Tuple[int, ...]:
        return (self.root, *_body_leaves(self.body))

    @property
    def degree(self) -> int:
        return len(self.leaves) - 1

    @property
    def max_label(self) -> int:
        return max(self.leaves)

    def to_text(self) -> str:
        return f"{self.root}:{_body_text(self.body)}"

    def __str__(self) -> str:  # noqa: D401
        return self.to_text()


def strut(i: int, j: int) -> LabeledTree:
    return LabeledTree(i, j)


def wedge(i: int, j: int, k: int) -> LabeledTree:
    """巡回順 (i, j, k) の Y。"""

    return LabeledTree(i, (j, k))


# ---- 文字列表現 ------------------------------------------------------------
def parse_tree(text: str) -> LabeledTree:
    compact = "".join(text.split())
    root_text, colon, body_text = compact.partition(":")
    if not colon or not root_text.isdigit() or not body_text:
        raise TreeFormatError(f"'根:本体' の形式ではありません: '{text}'")
    position = 0

    def parse_body() -> Body:
        nonlocal position
        if position >= len(body_text):
            raise TreeFormatError(f"木の表記が途中で終わっています: '{text}'")
        if body_text[position] == "[":
            position += 1
            left = parse_body()
            if position >= len(body_text) or body_text[position] != ",":
                raise TreeFormatError(f"位置 {position} に ',' が必要です: '{text}'")
            position += 1
            right = parse_body()
            if position >= len(body_text) or body_text[position] != "]":
                raise TreeFormatError(f"位置 {position} に ']' が必要です: '{text}'")
            position += 1
            return (left, right)
        start = position
        while position < len(body_text) and body_text[position].isdigit():
            position += 1
        if start == position:
            raise TreeFormatError(f"位置 {start} に葉ラベルが必要です: '{text}'")
        return int(body_text[start:position])

    body = parse_body()
    if position != len(body_text):
        raise TreeFormatError(f"余分な文字があります: '{body_text[position:]}'")
    return LabeledTree(int(root_text), body)


def format_tree(tree: LabeledTree) -> str:
    return tree.to_text()


# ---- 無根の表現 --------------------------------------------------------------
@dataclass
class TreeGraph:
    """葉と三価頂点を共通のノード ID で持つ無根の木。

    ``labels`` は葉ノード → ラベル、``adjacency`` はノード → 隣接ノード列
    (三価頂点では巡回順の 3 個、葉では 1 個)。
    """

    labels: Dict[int, int] = field(default_factory=dict)
    adjacency: Dict[int, List[int]] = field(default_factory=dict)
    next_id: int = 0

    @classmethod
    def from_tree(cls, tree: LabeledTree) -> "TreeGraph":
        graph = cls()
        root = graph._new_leaf(tree.root)
        child = graph._attach(tree.body, root)
        graph.adjacency[root] = [child]
        return graph

    def _new_node(self) -> int:
        node = self.next_id
        self.next_id += 1
        return node

    def _new_leaf(self, label: int) -> int:
        node = self._new_node()
        self.labels[node] = label
        return node

    def _attach(self, body: Body, parent: int) -> int:
        if isinstance(body, int):
            leaf = self._new_leaf(body)
            self.adjacency[leaf] = [parent]
            return leaf
        vertex = self._new_node()
        left = self._attach(body[0], vertex)
        right = self._attach(body[1], vertex)
        self.adjacency[vertex] = [parent, left, right]
        return vertex

    def copy(self) -> "TreeGraph":
        return TreeGraph(
            labels=dict(self.labels),
            adjacency={node: list(neighbours) for node, neighbours in self.adjacency.items()},
            next_id=self.next_id,
        )

    def is_leaf(self, node: int) -> bool:
        return node in self.labels

    @property
    def vertices(self) -> List[int]:
        return sorted(node for node in self.adjacency if node not in self.labels)

    @property
    def degree(self) -> int:
        return len(self.labels) - 1

    def rotated(self, vertex: int, first: int) -> Tuple[int, int, int]:
        """``first`` が先頭に来るよう巡回回転した隣接列。"""

        a, b, c = self.adjacency[vertex]
        for rotation in ((a, b, c), (b, c, a), (c, a, b)):
            if rotation[0] == first:
                return rotation
        raise TreeFormatError(f"ノード {first} は頂点 {vertex} に隣接していません")

    def internal_edges(self) -> List[Tuple[int, int]]:
        edges = []
        for vertex in self.vertices:
            for neighbour in self.adjacency[vertex]:
                if neighbour > vertex and not self.is_leaf(neighbour):
                    edges.append((vertex, neighbour))
        return edges

    def has_inner_vertex(self) -> bool:
        """3 つの隣接点が全て三価頂点である頂点があるか。"""

        return any(
            not any(self.is_leaf(neighbour) for neighbour in self.adjacency[vertex])
            for vertex in self.vertices
        )

    def replace_neighbour(self, node: int, old: int, new: int) -> None:
        neighbours = self.adjacency[node]
        neighbours[neighbours.index(old)] = new

    def remove(self, *nodes: int) -> None:
        for node in nodes:
            self.adjacency.pop(node, None)
            self.labels.pop(node, None)

    def to_tree(self, root: int) -> LabeledTree:
        """葉 ``root`` を根として二分木表記に戻す。巡回順は保たれる。"""

        if not self.is_leaf(root):
            raise TreeFormatError(f"ノード {root} は葉ではありません")

        def body(node: int, parent: int) -> Body:
            if self.is_leaf(node):
                return self.labels[node]
            _, left, right = self.rotated(node, parent)
            return (body(left, node), body(right, node))

        return LabeledTree(self.labels[root], body(self.adjacency[root][0], root))


# ---- AS 正規化 --------------------------------------------------------------
def _body_key(body: Body) -> tuple:
    if isinstance(body, int):
        return (0, body)
    return (1, _body_key(body[0]), _body_key(body[1]))


def _sort_body(body: Body) -> Tuple[Body, int]:
    if isinstance(body, int):
        return body, 1
    left, left_sign = _sort_body(body[0])
    right, right_sign = _sort_body(body[1])
    sign = left_sign * right_sign
    if sign == 0:
        return body, 0
    left_key, right_key = _body_key(left), _body_key(right)
    if left_key == right_key:
        # 同じ部分木を入れ替えると自身の -1 倍になる
        return body, 0
    if right_key < left_key:
        return (right, left), -sign
    return (left, right), sign


def canonicalize(tree: LabeledTree) -> Tuple[Optional[LabeledTree], int]:
    """AS 関係での代表元と符号。AS 関係で 0 になる木は ``(None, 0)``。"""

    graph = TreeGraph.from_tree(tree)
    smallest = min(graph.labels.values())
    best: Optional[Tuple[tuple, LabeledTree, int]] = None
    for node, label in graph.labels.items():
        if label != smallest:
            continue
        rooted = graph.to_tree(node)
        body, sign = _sort_body(rooted.body)
        if sign == 0:
            return None, 0
        candidate = LabeledTree(rooted.root, body)
        key = _body_key(body)
        if best is None or key < best[0]:
            best = (key, candidate, sign)
        elif key == best[0] and sign != best[2]:
            return None, 0
    assert best is not None
    return best[1], best[2]


def tree_ihx(tree: LabeledTree, edge: Optional[Tuple[int, int]] = None) -> List[LabeledTree]:
    """内部辺での IHX 3 項 E(A,B|C,D), E(A,C|D,B), E(A,D|B,C)。和は 0。

    ``edge`` は ``TreeGraph.from_tree(tree).internal_edges()`` の要素。省略時は最初の内部辺。
    """

    graph = TreeGraph.from_tree(tree)
    edges = graph.internal_edges()
    if not edges:
        raise TreeFormatError(f"内部辺を持たない木です: {tree}")
    u, w = edge if edge is not None else edges[0]
    _, a, b = graph.rotated(u, w)
    _, c, d = graph.rotated(w, u)
    owner = {a: u, b: u, c: w, d: w}
    root = next(node for node in graph.labels)
    results = []
    for p, q, r, s in ((a, b, c, d), (a, c, d, b), (a, d, b, c)):
        regrouped = graph.copy()
        regrouped.adjacency[u] = [w, p, q]
        regrouped.adjacency[w] = [u, r, s]
        for node, new_owner in ((p, u), (q, u), (r, w), (s, w)):
            regrouped.replace_neighbour(node, owner[node], new_owner)
        results.append(regrouped.to_tree(root))
    return results


def random_tree(degree: int, m: int, rng: random.Random) -> LabeledTree:
    """ラベル 1..m の次数 ``degree`` のランダムな木。"""

    if degree < 1:
        raise TreeFormatError(f"木の次数は 1 以上である必要があります: {degree}")

    def build(leaves: int) -> Body:
        if leaves == 1:
            return rng.randint(1, m)
        split = rng.randint(1, leaves - 1)
        return (build(split), build(leaves - split))

    return LabeledTree(rng.randint(1, m), build(degree))


__all__ = [
    "Body",
    "LabeledTree",
    "TreeGraph",
    "canonicalize",
    "format_tree",
    "parse_tree",
    "random_tree",
    "strut",
    "tree_ihx",
    "wedge",
]
