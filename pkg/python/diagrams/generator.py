# -*- coding: utf-8 -*-
"""形を指定したランダム図式の生成。

成分は抽象的な辺リスト (ノードは ("L", i) / ("V", i)) として作り、
``realize`` で脚を円周上のランダムな位置に、辺の端点を頂点のランダムなスロットに割り当てる。
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import DiagramFormatError
from .models import Diagram, DiagramParts

Node = Tuple[str, int]


@dataclass(frozen=True)
class ComponentSpec:
    """生成する成分の種類と次数。wheel と other では ``size`` は輪の頂点数。"""

    kind: str
    size: int

    @property
    def degree(self) -> int:
        if self.kind == "tree":
            return self.size
        if self.kind == "wheel":
            return self.size
        return self.size + 1

    def describe(self) -> str:
        return f"{self.kind}({self.size})"


@dataclass
class AbstractComponent:
    legs: int
    vertices: int
    edges: List[Tuple[Node, Node]]


def tree_component(degree: int, rng: random.Random) -> AbstractComponent:
    """次数 ``degree`` の木。1 本の弦から始めて、辺の細分と脚の追加を繰り返す。"""

    if degree < 1:
        raise DiagramFormatError(f"木の次数は 1 以上である必要があります: {degree}")
    edges: List[Tuple[Node, Node]] = [(("L", 0), ("L", 1))]
    legs, vertices = 2, 0
    for _ in range(degree - 1):
        index = rng.randrange(len(edges))
        left, right = edges.pop(index)
        middle: Node = ("V", vertices)
        vertices += 1
        edges.extend([(left, middle), (middle, right), (middle, ("L", legs))])
        legs += 1
    return AbstractComponent(legs, vertices, edges)


def wheel_component(spokes: int) -> AbstractComponent:
    """脚 ``spokes`` 本の wheel。1 本なら自己ループ、2 本なら二重辺になる。"""

    if spokes < 1:
        raise DiagramFormatError(f"wheel の脚の数は 1 以上である必要があります: {spokes}")
    edges: List[Tuple[Node, Node]] = []
    for index in range(spokes):
        edges.append((("V", index), ("V", (index + 1) % spokes)))
        edges.append((("V", index), ("L", index)))
    return AbstractComponent(spokes, spokes, edges)


def other_component(spokes: int) -> AbstractComponent:
    """wheel の 1 本のスポークを、脚 2 本を持つ頂点に置き換えた木でも wheel でもない成分。"""

    base = wheel_component(spokes)
    edges = [edge for edge in base.edges if edge != (("V", 0), ("L", 0))]
    extra: Node = ("V", spokes)
    edges.extend([(("V", 0), extra), (extra, ("L", 0)), (extra, ("L", spokes))])
    return AbstractComponent(spokes + 1, spokes + 1, edges)


def build_component(spec: ComponentSpec, rng: random.Random) -> AbstractComponent:
    if spec.kind == "tree":
        return tree_component(spec.size, rng)
    if spec.kind == "wheel":
        return wheel_component(spec.size)
    if spec.kind == "other":
        return other_component(spec.size)
    raise DiagramFormatError(f"未知の成分種別です: {spec.kind}")


def realize(m: int, components: Sequence[AbstractComponent], rng: random.Random) -> Diagram:
    """抽象成分を m 本の円周に載せた図式にする。"""

    parts = DiagramParts([[] for _ in range(m)], [], {}, 1)
    for component in components:
        leg_ids: Dict[int, int] = {}
        for index in range(component.legs):
            leg = parts.fresh()
            target = parts.circles[rng.randrange(m)]
            target.insert(rng.randint(0, len(target)), leg)
            leg_ids[index] = leg
        free_slots: Dict[int, List[int]] = {}
        for index in range(component.vertices):
            slots = (parts.fresh(), parts.fresh(), parts.fresh())
            parts.vertices.append(slots)
            shuffled = list(slots)
            rng.shuffle(shuffled)
            free_slots[index] = shuffled

        def endpoint(node: Node) -> int:
            kind, index = node
            if kind == "L":
                return leg_ids[index]
            return free_slots[index].pop()

        for left, right in component.edges:
            parts.connect(endpoint(left), endpoint(right))
    diagram = parts.freeze()
    diagram.check_components()
    return diagram


def random_diagram(m: int, specs: Sequence[ComponentSpec], rng: random.Random) -> Diagram:
    return realize(m, [build_component(spec, rng) for spec in specs], rng)


def random_shape(
    total_degree: int,
    rng: random.Random,
    *,
    min_tree_degree: int = 1,
    max_attempts: int = 200,
) -> List[ComponentSpec]:
    """合計次数 ``total_degree`` の成分構成をランダムに選ぶ。

    木は次数 ``min_tree_degree`` 以上、wheel は脚 2 本以上、other は次数 3 以上。
    """

    floor = max(min_tree_degree, 1)
    for _ in range(max_attempts):
        remaining = total_degree
        specs: List[ComponentSpec] = []
        while remaining > 0:
            options: List[ComponentSpec] = []
            options.extend(ComponentSpec("tree", size) for size in range(floor, remaining + 1))
            options.extend(ComponentSpec("wheel", size) for size in range(2, remaining + 1))
            options.extend(ComponentSpec("other", size) for size in range(2, remaining))
            if not options:
                break
            choice = rng.choice(options)
            specs.append(choice)
            remaining -= choice.degree
        if remaining == 0 and specs:
            return specs
    raise DiagramFormatError(
        f"次数 {total_degree} を木の最小次数 {min_tree_degree} の条件で成分に分割できません"
    )


__all__ = [
    "AbstractComponent",
    "ComponentSpec",
    "build_component",
    "other_component",
    "random_diagram",
    "random_shape",
    "realize",
    "tree_component",
    "wheel_component",
]
