# -*- coding: utf-8 -*-
"""m 本の実線円周上の uni-trivalent 図式。

端点 (脚と三価頂点のスロット) は整数 ID で表し、破線の辺は ``mate`` による
端点の対合で表す。脚は円周上に向きに沿って並び、三価頂点はスロットの巡回順を持つ。
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .errors import DiagramFormatError

Slots = Tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class Diagram:
    """円周 ``circles`` (0 始まり) と三価頂点 ``vertices`` からなる図式。"""

    m: int
    circles: Tuple[Tuple[int, ...], ...]
    vertices: Tuple[Slots, ...]
    mate: Mapping[int, int]

    def __post_init__(self) -> None:
        if len(self.circles) != self.m:
            raise DiagramFormatError(f"円周の数 {len(self.circles)} が m={self.m} と一致しません")
        endpoints: List[int] = [leg for circle in self.circles for leg in circle]
        endpoints.extend(slot for slots in self.vertices for slot in slots)
        if len(set(endpoints)) != len(endpoints):
            raise DiagramFormatError("脚またはスロットの ID が重複しています")
        if set(self.mate) != set(endpoints):
            raise DiagramFormatError("全ての端点がちょうど 1 本の破線に接続されていません")
        for source, target in self.mate.items():
            if source == target or self.mate.get(target) != source:
                raise DiagramFormatError(f"破線の対応が対称ではありません: {source} -> {target}")

    # ---- 構造参照 -----------------------------------------------------
    @cached_property
    def leg_location(self) -> Dict[int, Tuple[int, int]]:
        """脚 ID → (円周番号, 円周上の位置)。"""

        return {
            leg: (circle_index, position)
            for circle_index, circle in enumerate(self.circles)
            for position, leg in enumerate(circle)
        }

    @cached_property
    def slot_location(self) -> Dict[int, Tuple[int, int]]:
        """スロット ID → (頂点番号, 巡回順での位置)。"""

        return {
            slot: (vertex_index, position)
            for vertex_index, slots in enumerate(self.vertices)
            for position, slot in enumerate(slots)
        }

    @cached_property
    def legs(self) -> Tuple[int, ...]:
        return tuple(leg for circle in self.circles for leg in circle)

    @cached_property
    def next_id(self) -> int:
        return max(self.mate, default=0) + 1

    def is_leg(self, endpoint: int) -> bool:
        return endpoint in self.leg_location

    def is_slot(self, endpoint: int) -> bool:
        return endpoint in self.slot_location

    @property
    def univalent_count(self) -> int:
        return len(self.legs)

    @property
    def trivalent_count(self) -> int:
        return len(self.vertices)

    @property
    def degree(self) -> int:
        return (self.univalent_count + self.trivalent_count) // 2

    def is_chord_diagram(self) -> bool:
        return not self.vertices

    def rotated_vertex(self, slot: int) -> Slots:
        """``slot`` が先頭に来るよう巡回回転した頂点のスロット列。"""

        vertex_index, position = self.slot_location[slot]
        a, b, c = self.vertices[vertex_index]
        rotations = ((a, b, c), (b, c, a), (c, a, b))
        return rotations[position]

    # ---- 破線グラフ ---------------------------------------------------
    def node_of(self, endpoint: int) -> Tuple[str, int]:
        """破線グラフ上のノード。脚は ("L", 脚 ID)、スロットは ("V", 頂点番号)。"""

        if endpoint in self.leg_location:
            return ("L", endpoint)
        return ("V", self.slot_location[endpoint][0])

    @cached_property
    def dashed_graph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(("L", leg) for leg in self.legs)
        graph.add_nodes_from(("V", index) for index in range(len(self.vertices)))
        for source, target in self.mate.items():
            if source < target:
                graph.add_edge(self.node_of(source), self.node_of(target))
        return graph

    def components(self) -> List[frozenset]:
        """破線成分のノード集合。最小の脚の円周順で並べる。"""

        order = {("L", leg): index for index, leg in enumerate(self.legs)}

        def first_leg(component: frozenset) -> int:
            return min((order[node] for node in component if node in order), default=len(order))

        parts = [frozenset(part) for part in nx.connected_components(self.dashed_graph)]
        return sorted(parts, key=first_leg)

    def check_components(self) -> None:
        """各破線成分が少なくとも 1 本の脚を持つことを確かめる。"""

        if (len(self.legs) + len(self.vertices)) % 2 != 0:
            raise DiagramFormatError("一価頂点と三価頂点の総数が奇数のため次数が整数になりません")
        for component in self.components():
            if not any(kind == "L" for kind, _ in component):
                raise DiagramFormatError("脚を持たない破線成分があります")

    # ---- 再構成 -------------------------------------------------------
    def thaw(self) -> "DiagramParts":
        return DiagramParts(
            circles=[list(circle) for circle in self.circles],
            vertices=list(self.vertices),
            mate=dict(self.mate),
            next_id=self.next_id,
        )

    def describe(self) -> str:
        circles = " | ".join(" ".join(str(leg) for leg in circle) for circle in self.circles)
        return f"Diagram(m={self.m}, degree={self.degree}, circles=[{circles}], vertices={len(self.vertices)})"

    def __repr__(self) -> str:
        return self.describe()


@dataclass
class DiagramParts:
    """書き換え途中の可変表現。削除した頂点は None で表す。"""

    circles: List[List[int]]
    vertices: List[Optional[Slots]]
    mate: Dict[int, int]
    next_id: int

    def fresh(self) -> int:
        value = self.next_id
        self.next_id += 1
        return value

    def connect(self, a: int, b: int) -> None:
        self.mate[a] = b
        self.mate[b] = a

    def drop(self, *endpoints: int) -> None:
        for endpoint in endpoints:
            self.mate.pop(endpoint, None)

    def remove_leg(self, leg: int) -> None:
        for circle in self.circles:
            if leg in circle:
                circle.remove(leg)
                break
        self.mate.pop(leg, None)

    def freeze(self) -> Diagram:
        return Diagram(
            m=len(self.circles),
            circles=tuple(tuple(circle) for circle in self.circles),
            vertices=tuple(v for v in self.vertices if v is not None),
            mate=dict(self.mate),
        )


class DiagramBuilder:
    """手書きで図式を組み立てる補助クラス。円周番号は 1 始まり。"""

    def __init__(self, m: int) -> None:
        if m < 1:
            raise DiagramFormatError(f"円周の数は 1 以上である必要があります: m={m}")
        self._parts = DiagramParts([[] for _ in range(m)], [], {}, 1)

    def leg(self, circle: int, position: Optional[int] = None) -> int:
        if not 1 <= circle <= len(self._parts.circles):
            raise DiagramFormatError(f"円周番号 {circle} が範囲外です")
        leg = self._parts.fresh()
        target = self._parts.circles[circle - 1]
        target.insert(len(target) if position is None else position, leg)
        return leg

    def vertex(self) -> Slots:
        slots = (self._parts.fresh(), self._parts.fresh(), self._parts.fresh())
        self._parts.vertices.append(slots)
        return slots

    def connect(self, a: int, b: int) -> None:
        if a in self._parts.mate or b in self._parts.mate:
            raise DiagramFormatError(f"端点 {a} または {b} は既に接続されています")
        self._parts.connect(a, b)

    def chord(self, circle_a: int, circle_b: int) -> Tuple[int, int]:
        first = self.leg(circle_a)
        second = self.leg(circle_b)
        self.connect(first, second)
        return first, second

    def y(self, circle_a: int, circle_b: int, circle_c: int) -> Slots:
        """脚を円周 a, b, c の末尾に置いた Y 字成分。頂点の巡回順は (a, b, c)。"""

        slots = self.vertex()
        for slot, circle in zip(slots, (circle_a, circle_b, circle_c)):
            self.connect(slot, self.leg(circle))
        return slots

    def build(self) -> Diagram:
        diagram = self._parts.freeze()
        diagram.check_components()
        return diagram


def chord_diagram(m: int, circles: Sequence[Sequence[int]]) -> Diagram:
    """円周ごとの弦ラベル列から弦図式を作る。同じラベルの 2 点が 1 本の弦で結ばれる。"""

    if len(circles) != m:
        raise DiagramFormatError(f"円周の数 {len(circles)} が m={m} と一致しません")
    parts = DiagramParts([[] for _ in range(m)], [], {}, 1)
    ends: Dict[int, List[int]] = {}
    for index, labels in enumerate(circles):
        for label in labels:
            leg = parts.fresh()
            parts.circles[index].append(leg)
            ends.setdefault(label, []).append(leg)
    for label, legs in ends.items():
        if len(legs) != 2:
            raise DiagramFormatError(f"弦ラベル {label} の端点が 2 個ではありません")
        parts.connect(legs[0], legs[1])
    return parts.freeze()


__all__ = [
    "Diagram",
    "DiagramBuilder",
    "DiagramParts",
    "Slots",
    "chord_diagram",
]
