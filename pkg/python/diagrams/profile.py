# -*- coding: utf-8 -*-
"""破線成分の形の分類 (弦 / Y / 木 / wheel / その他)。"""

from __future__ import annotations

from typing import List, Literal

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from .models import Diagram

ComponentKind = Literal["chord", "Y", "tree", "wheel", "other"]


class ComponentShape(BaseModel):
    """破線成分 1 個の分類結果。"""

    model_config = ConfigDict(frozen=True)

    kind: ComponentKind
    legs: int = Field(ge=1, description="一価頂点 (脚) の数。")
    vertices: int = Field(ge=0, description="三価頂点の数。")
    circles: List[int] = Field(
        default_factory=list,
        description="脚が乗っている円周番号 (1 始まり、重複あり、円周順)。",
    )

    @property
    def degree(self) -> int:
        return (self.legs + self.vertices) // 2


class ComponentProfile(BaseModel):
    """図式の全破線成分の分類。並びは各成分の最初の脚の円周順。"""

    model_config = ConfigDict(frozen=True)

    components: List[ComponentShape] = Field(default_factory=list)

    def count(self, kind: ComponentKind) -> int:
        return sum(1 for shape in self.components if shape.kind == kind)

    def trees(self) -> List[ComponentShape]:
        """弦と Y も次数 1, 2 の木として含めた木成分。"""

        return [shape for shape in self.components if shape.kind in ("chord", "Y", "tree")]

    def summary(self) -> str:
        parts = []
        for shape in self.components:
            if shape.kind == "tree":
                parts.append(f"tree({shape.degree})")
            elif shape.kind == "wheel":
                parts.append(f"wheel({shape.legs})")
            else:
                parts.append(shape.kind)
        return " + ".join(parts) if parts else "empty"


def _classify(graph: nx.MultiGraph, legs: int, vertices: int) -> ComponentKind:
    if vertices == 0:
        return "chord"
    if nx.is_tree(graph):
        return "Y" if vertices == 1 else "tree"
    cycle_rank = graph.number_of_edges() - graph.number_of_nodes() + 1
    if cycle_rank == 1 and legs == vertices:
        # 単一閉路で各頂点がちょうど 1 本の脚を持つ
        spokes = all(
            sum(1 for neighbour in graph.neighbors(node) if neighbour[0] == "L") == 1
            for node in graph.nodes
            if node[0] == "V"
        )
        if spokes:
            return "wheel"
    return "other"


def profile_components(diagram: Diagram) -> ComponentProfile:
    shapes: List[ComponentShape] = []
    for component in diagram.components():
        graph = diagram.dashed_graph.subgraph(component)
        leg_nodes = [node for node in component if node[0] == "L"]
        vertex_count = len(component) - len(leg_nodes)
        circles = sorted(diagram.leg_location[leg][0] + 1 for _, leg in leg_nodes)
        shapes.append(
            ComponentShape(
                kind=_classify(graph, len(leg_nodes), vertex_count),
                legs=len(leg_nodes),
                vertices=vertex_count,
                circles=circles,
            )
        )
    return ComponentProfile(components=shapes)


__all__ = ["ComponentKind", "ComponentProfile", "ComponentShape", "profile_components"]
